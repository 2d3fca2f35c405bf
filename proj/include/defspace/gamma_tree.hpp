#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "defspace/chunks.hpp"
#include "defspace/defining_graph.hpp"

namespace defspace {

/// A connected defining graph together with its chunk decomposition. Every
/// tree over the same graph shares one instance.
class SplittingBase {
 public:
  /// Throws ConstraintError when `g` is disconnected.
  static std::shared_ptr<const SplittingBase> make(DefiningGraph g);

  const DefiningGraph& graph() const { return graph_; }
  const std::vector<VertexSet>& chunks() const { return chunks_; }
  std::optional<int> chunk_index(VertexSet s) const;
  bool large_type() const { return large_type_; }

 private:
  explicit SplittingBase(DefiningGraph g);

  DefiningGraph graph_;
  std::vector<VertexSet> chunks_;
  bool large_type_ = false;
};

enum class LabelKind { kChunk, kCyclic, kDihedral, kOther };

const char* to_string(LabelKind k);

/// Standard parabolic A_S named by its generating set S.
struct ParabolicLabel {
  VertexSet members;
  LabelKind kind = LabelKind::kOther;
  friend bool operator==(const ParabolicLabel&, const ParabolicLabel&) = default;
};

/// Kind by shape only: one vertex is cyclic, an edge of the graph is dihedral.
LabelKind shape_kind(const DefiningGraph& g, VertexSet s);
/// Node kind: chunk when `s` is a chunk of the base, otherwise shape_kind.
ParabolicLabel node_parabolic(const SplittingBase& base, VertexSet s);

struct TreeEdge {
  int a = 0;
  int b = 0;
  VertexSet label;
  int other(int node) const { return node == a ? b : a; }
  bool touches(int node) const { return a == node || b == node; }
};

/// Finite labeled tree K standing for a splitting of A_Gamma as a graph of
/// groups: nodes and edges carry standard parabolic subgroups, named by
/// vertex subsets of the base graph. Nodes are numbered 0..n-1.
///
/// The constructor checks references only (node ids in range, labels inside
/// the base vertex set); structural axioms are checked by validate_splitting,
/// so non-trees and intermediate move products are representable.
class GammaTree {
 public:
  /// Throws InvalidInput on dangling node or vertex references.
  GammaTree(std::shared_ptr<const SplittingBase> base, std::vector<VertexSet> nodes, std::vector<TreeEdge> edges);

  const SplittingBase& base() const { return *base_; }
  const std::shared_ptr<const SplittingBase>& base_ptr() const { return base_; }
  const DefiningGraph& graph() const { return base_->graph(); }

  int node_count() const { return static_cast<int>(nodes_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  VertexSet node_label(int v) const { return nodes_[v]; }
  const std::vector<VertexSet>& node_labels() const { return nodes_; }
  const TreeEdge& edge(int e) const { return edges_[e]; }
  const std::vector<TreeEdge>& edges() const { return edges_; }

  std::vector<int> incident_edges(int node) const;
  int degree(int node) const;

  /// Edge label equals the label of one endpoint.
  bool collapsible(int e) const;
  bool reduced() const;

 private:
  std::shared_ptr<const SplittingBase> base_;
  std::vector<VertexSet> nodes_;
  std::vector<TreeEdge> edges_;
};

enum class Clause {
  kNotATree,
  kContainment,
  kSupportSubtree,
  kCoverage,
  kChunkAxiom,
  kLabelKind,
  kMinimality,
  kValenceTwo,
};

const char* to_string(Clause c);

struct Violation {
  Clause clause;
  std::string detail;
};

struct SplittingVerdict {
  bool valid_visual_splitting = false;
  bool valid_gamma_tree = false;
  std::vector<Violation> violations;
};

/// Checks the visual-splitting clauses (tree, containment, support subtree,
/// coverage) and the Gamma-tree clauses (chunk axiom, label kinds,
/// minimality, no valence two). Minimality and valence two are read on the
/// quotient: a leaf whose label equals its edge label, or a node with exactly
/// two incident edges both labeled like the node. Proper inclusions of
/// standard parabolics are taken to have infinite index.
SplittingVerdict validate_splitting(const GammaTree& k);

/// validate_splitting(k).valid_gamma_tree without building the violation list.
bool is_gamma_tree(const GammaTree& k);

/// Equal for two trees over the same base iff a label-preserving tree
/// isomorphism exists. Node numbering does not contribute.
CanonicalCode canonical_tree_code(const GammaTree& k);

/// Canonical code of `k` with edge `marked` distinguished; equal for (k, e)
/// and (k', e') iff some label-preserving isomorphism carries e to e'.
CanonicalCode canonical_tree_code(const GammaTree& k, int marked);

/// Chunk-kind node labels of `k`, in canonical chunk order.
std::vector<VertexSet> elliptic_chunk_sets(const GammaTree& k);

/// The deterministic T_Gamma: start from one node per chunk and repeatedly
/// join two components, preferring chunk pairs that share an edge over pairs
/// that share a vertex, and within a preference class the least pair in
/// canonical chunk order. Edge labels are the shared simplex.
/// Throws ConstraintError unless the base is large-type.
GammaTree build_t_gamma(const std::shared_ptr<const SplittingBase>& base);

/// Every tree reachable by some valid choice sequence of the joining
/// process, deduplicated by canonical code and sorted by it.
std::vector<GammaTree> enumerate_t_gamma(const std::shared_ptr<const SplittingBase>& base);

/// Multiline human-readable rendering ("0 {p,q,r} chunk" / "0-1 {p,q}").
std::string describe(const GammaTree& k);

}  // namespace defspace
