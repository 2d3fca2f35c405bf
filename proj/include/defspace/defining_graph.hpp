#pragma once

#include <compare>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "defspace/vertex_set.hpp"

namespace defspace {

/// Edge of a defining graph; endpoints are vertex indices with a < b.
struct LabeledEdge {
  int a = 0;
  int b = 0;
  int label = 0;
  friend bool operator==(const LabeledEdge&, const LabeledEdge&) = default;
};

/// Edge given by endpoint names, used when building graphs.
struct NamedEdge {
  std::string u;
  std::string v;
  int label = 0;
};

/// A finite simplicial graph with integer edge labels m_ab >= 2, the
/// presentation data of an Artin group.
///
/// Vertices are indexed 0..n-1 in code-point order of their names, so every
/// index-based tie-break is also a name-based one. Immutable once built.
class DefiningGraph {
 public:
  /// Validates and builds. Throws InvalidInput on an empty vertex set, a bad
  /// identifier, a label < 2, a loop, or a duplicate edge.
  static DefiningGraph build(std::vector<std::string> vertices, const std::vector<NamedEdge>& edges);

  int vertex_count() const { return static_cast<int>(names_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  VertexSet all() const { return VertexSet::first(vertex_count()); }

  const std::string& name(int v) const { return names_[v]; }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<int> find(std::string_view name) const;
  /// Throws UnknownVertex.
  int index(std::string_view name) const;

  /// 0 when a and b are not adjacent.
  int label(int a, int b) const { return labels_[a * vertex_count() + b]; }
  bool adjacent(int a, int b) const { return label(a, b) != 0; }
  VertexSet neighbors(int v) const { return adjacency_[v]; }
  const std::vector<LabeledEdge>& edges() const { return edges_; }

  /// Sorted names of the members of `s`.
  std::vector<std::string> names_of(VertexSet s) const;
  /// Set from names; throws UnknownVertex.
  VertexSet set_of(const std::vector<std::string>& names) const;
  /// "{p,q,r}"
  std::string format(VertexSet s) const;

  DefiningGraph induced(VertexSet s) const;
  std::vector<NamedEdge> named_edges() const;

  friend bool operator==(const DefiningGraph& a, const DefiningGraph& b) {
    return a.names_ == b.names_ && a.edges_ == b.edges_;
  }

 private:
  DefiningGraph() = default;

  std::vector<std::string> names_;
  std::vector<LabeledEdge> edges_;
  std::vector<int> labels_;
  std::vector<VertexSet> adjacency_;
};

/// True for nonempty identifiers over [A-Za-z0-9_].
bool valid_identifier(std::string_view id);

/// Parses the line-oriented .adg format:
///
///     # comment
///     vertex <id>
///     edge <u> <v> <m>
///
/// Throws ParseError carrying the offending line number.
DefiningGraph parse_defining_graph(std::string_view text);
DefiningGraph load_defining_graph(const std::string& path);

/// Serializes to .adg; edges sorted by endpoint names, isolated vertices
/// declared explicitly. parse(to_adg(g)) == g.
std::string to_adg(const DefiningGraph& g);

struct ClassFlags {
  bool connected = false;
  bool large_type = false;     ///< all labels >= 3
  bool xxxl = false;           ///< all labels >= 6
  bool triangle_free = false;
  bool spherical = false;      ///< single vertex, or two vertices joined by an edge
  bool even_dihedral = false;  ///< spherical with one even-labeled edge
  bool rigid_chunks_proven = false;  ///< triangle_free or xxxl
};

ClassFlags classify(const DefiningGraph& g);

bool is_connected(const DefiningGraph& g, VertexSet within);
/// Connected components of the induced subgraph on `within`, ordered by lowest member.
std::vector<VertexSet> components(const DefiningGraph& g, VertexSet within);

/// Vertices reachable from `source` along odd-labeled edges, staying inside `within`.
VertexSet odd_reachable(const DefiningGraph& g, int source, VertexSet within);
VertexSet odd_reachable(const DefiningGraph& g, std::string_view source);

/// A shortest odd-labeled path from `from` to `to` inside `within`, chosen
/// deterministically. Empty when unreachable.
std::vector<int> odd_path(const DefiningGraph& g, int from, int to, VertexSet within);

/// Byte string that is equal for two graphs iff they are isomorphic as
/// labeled graphs. Vertex names do not contribute.
struct CanonicalCode {
  std::string bytes;
  friend bool operator==(const CanonicalCode&, const CanonicalCode&) = default;
  friend auto operator<=>(const CanonicalCode&, const CanonicalCode&) = default;
};

CanonicalCode canonical_graph_code(const DefiningGraph& g);

/// Canonical ordering of the vertices of `g` realising its canonical code:
/// order[i] is the vertex placed at position i.
std::vector<int> canonical_vertex_order(const DefiningGraph& g);

}  // namespace defspace

template <>
struct std::hash<defspace::CanonicalCode> {
  std::size_t operator()(const defspace::CanonicalCode& c) const noexcept {
    return std::hash<std::string>{}(c.bytes);
  }
};
