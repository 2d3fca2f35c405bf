#pragma once

#include <vector>

#include "defspace/defining_graph.hpp"

namespace defspace {

/// A vertex or an edge of a defining graph, given by its vertex set (one or two members).
struct Simplex {
  VertexSet members;
  static Simplex vertex(int v) { return {VertexSet::single(v)}; }
  static Simplex edge(int a, int b) { return {VertexSet::pair(a, b)}; }
};

/// True iff removing the simplex's vertices from `g` leaves at least two
/// components. An empty remainder is not disconnected. Throws InvalidInput
/// when the simplex is not a vertex or an edge of `g`.
bool is_separating(const DefiningGraph& g, Simplex simplex);

/// The separating test relative to the induced subgraph on `within`.
bool is_separating_within(const DefiningGraph& g, VertexSet within, VertexSet simplex);

/// True iff the induced subgraph on `s` is nonempty, connected and has no
/// separating vertex or edge of its own.
bool chunk_check(const DefiningGraph& g, VertexSet s);

/// Maximal vertex subsets passing chunk_check, in canonical chunk order:
/// larger chunks first, then lexicographic on sorted member names.
/// Throws ConstraintError on disconnected input.
///
/// In a connected graph with at least one edge no single vertex is a chunk,
/// since every vertex lies on an edge and edges always pass chunk_check.
std::vector<VertexSet> chunks(const DefiningGraph& g);

/// Canonical chunk order used throughout.
bool chunk_order_less(const DefiningGraph& g, VertexSet a, VertexSet b);

}  // namespace defspace
