#pragma once

#include <unordered_map>
#include <variant>
#include <vector>

#include "defspace/gamma_tree.hpp"

namespace defspace {

/// Remove a collapsible edge and identify its endpoints.
struct CollapseMove {
  int edge = 0;
};

/// Insert a node labeled `label` next to `node`, joined by an edge with the
/// same label, and re-attach `transfer` (edges at `node`) to the new node.
struct ExpandMove {
  int node = 0;
  VertexSet label;
  std::vector<int> transfer;
};

/// Move the endpoint of `moved` at their shared node to the far end of `along`.
struct SlideMove {
  int moved = 0;
  int along = 0;
};

using MoveDescriptor = std::variant<CollapseMove, ExpandMove, SlideMove>;

/// Collapses edge e = {u, v} with label(e) == label(u): u is merged into v,
/// the merged node keeps label(v). When both endpoint labels equal the edge
/// label the higher-numbered endpoint is removed.
///
/// Numbering of the result: the removed node's id disappears and later ids
/// shift down by one; edge e disappears the same way. Throws InvalidMove when
/// the edge is not collapsible.
GammaTree collapse(const GammaTree& k, int e);

/// Throws InvalidMove when the label is not cyclic or dihedral, is not
/// inside the node label, or a transferred edge is not at the node or has a
/// label outside `label`. The new node gets id node_count(), the new edge id
/// edge_count().
GammaTree expand(const GammaTree& k, const ExpandMove& m);

/// Throws InvalidMove when the edges coincide, share no endpoint, or the
/// moved label is not inside the label of `along`.
GammaTree slide(const GammaTree& k, int moved, int along);

GammaTree apply(const GammaTree& k, const MoveDescriptor& m);

/// The expansion that undoes collapse(k, e), expressed in the numbering of
/// the collapsed tree: expand(collapse(k, e), inverse_of_collapse(k, e)) has
/// the canonical code of k.
ExpandMove inverse_of_collapse(const GammaTree& k, int e);

/// Node that survives / is removed by collapse(k, e).
std::pair<int, int> collapse_endpoints(const GammaTree& k, int e);

/// Every legal expansion of `k`, skipping labels equal to a chunk (these can
/// never yield a Gamma-tree).
std::vector<ExpandMove> candidate_expansions(const GammaTree& k);

/// Every legal single-edge slide of `k` as (moved, along) pairs.
std::vector<SlideMove> candidate_slides(const GammaTree& k);

/// Memoized survival queries, keyed by the marked canonical code so that
/// answers carry over between isomorphic trees.
class SurvivalOracle {
 public:
  bool survives(const GammaTree& k, int e);

 private:
  std::unordered_map<CanonicalCode, bool> memo_;
};

struct TreeStatus {
  bool reduced = false;
  std::vector<int> surviving_edges;  ///< ascending edge ids
  bool surviving = false;
};

/// An edge survives when some sequence of collapses reaching a reduced tree
/// never collapses it; all collapse sequences are searched.
TreeStatus tree_status(const GammaTree& k);
TreeStatus tree_status(const GammaTree& k, SurvivalOracle& oracle);

}  // namespace defspace
