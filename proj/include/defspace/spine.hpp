#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "defspace/gamma_tree.hpp"

namespace defspace {

struct EnumerationOptions {
  /// Extra non-chunk nodes allowed beyond the chunk count; default_max_extra when unset.
  std::optional<int> max_extra;
  /// Enumeration stops with LimitExceeded once this many classes are found.
  std::size_t class_cap = 500000;
};

/// C(|I|,2) * (2(|I|-2) + 2|V|) for |I| chunks, 0 when there is at most one chunk.
int default_max_extra(const SplittingBase& base);

struct Enumeration {
  int max_extra = 0;
  int node_cap = 0;
  std::vector<GammaTree> trees;  ///< one per class, sorted by code
  std::vector<CanonicalCode> codes;
};

/// All isomorphism classes of Gamma-trees with at most |I| + max_extra nodes.
/// Reduced classes are the spanning trees of the chunk intersection graph that
/// pass validation; the others are reached from them by expansions, since a
/// collapse of a Gamma-tree is again a Gamma-tree.
/// Throws ConstraintError unless the graph is connected and large-type, and
/// LimitExceeded when the class cap is reached.
Enumeration enumerate_gamma_trees(const std::shared_ptr<const SplittingBase>& base,
                                  const EnumerationOptions& options = {});

/// The reduced classes only.
Enumeration enumerate_reduced_gamma_trees(const std::shared_ptr<const SplittingBase>& base);

struct SpineClass {
  bool reduced = false;
  bool surviving = false;
  std::vector<int> surviving_edges;
};

struct SpineReport {
  CanonicalCode graph_code;
  Enumeration enumeration;
  std::vector<SpineClass> status;  ///< parallel to enumeration.trees
  std::vector<int> reduced;        ///< class indices
  std::vector<int> surviving;
  /// Undirected single-slide adjacency between reduced classes, by class index.
  std::vector<std::vector<int>> slide_graph;
  /// (from, to): a single collapse of class `from` gives class `to`; both surviving.
  std::vector<std::pair<int, int>> collapse_poset;
  int dimension = 0;
  bool slide_graph_connected = false;
};

SpineReport spine(const std::shared_ptr<const SplittingBase>& base, const EnumerationOptions& options = {});
SpineReport spine(const DefiningGraph& g, const EnumerationOptions& options = {});

/// Class index of `k` in `e`, if any.
std::optional<int> find_class(const Enumeration& e, const GammaTree& k);

/// Whether `adjacency` (restricted to `members`) is connected; true when empty.
bool connected_among(const std::vector<std::vector<int>>& adjacency, const std::vector<int>& members);

}  // namespace defspace
