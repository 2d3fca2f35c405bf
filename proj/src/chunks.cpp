#include "defspace/chunks.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

#include "defspace/errors.hpp"

namespace defspace {

bool is_separating_within(const DefiningGraph& g, VertexSet within, VertexSet simplex) {
  VertexSet rest = within - simplex;
  if (rest.empty()) return false;
  return !is_connected(g, rest);
}

bool is_separating(const DefiningGraph& g, Simplex simplex) {
  const VertexSet m = simplex.members;
  if (!m.subset_of(g.all()) || m.empty() || m.size() > 2)
    throw InvalidInput("simplex is not a vertex or an edge of the graph");
  if (m.size() == 2) {
    int a = m.lowest();
    int b = (m - VertexSet::single(a)).lowest();
    if (!g.adjacent(a, b)) throw InvalidInput(g.format(m) + " is not an edge of the graph");
  }
  return is_separating_within(g, g.all(), m);
}

namespace {

class ChunkSearch {
 public:
  explicit ChunkSearch(const DefiningGraph& g) : g_(g) {}

  bool connected(VertexSet s) {
    if (s.empty()) return true;
    auto [it, fresh] = connected_.try_emplace(s, false);
    if (fresh) it->second = is_connected(g_, s);
    return it->second;
  }

  bool eligible(VertexSet s) {
    if (s.empty() || !connected(s)) return false;
    for (int v : s)
      if (!connected(s - VertexSet::single(v))) return false;
    for (int a : s)
      for (int b : g_.neighbors(a) & s)
        if (a < b && !connected(s - VertexSet::pair(a, b))) return false;
    return true;
  }

  // Every connected induced subgraph, grown one neighbour at a time from
  // each single vertex.
  std::vector<VertexSet> connected_sets() {
    std::unordered_set<VertexSet> seen;
    std::vector<VertexSet> stack;
    for (int v : g_.all()) {
      auto s = VertexSet::single(v);
      if (seen.insert(s).second) stack.push_back(s);
    }
    std::vector<VertexSet> out;
    while (!stack.empty()) {
      VertexSet s = stack.back();
      stack.pop_back();
      out.push_back(s);
      VertexSet frontier;
      for (int v : s) frontier |= g_.neighbors(v);
      for (int w : frontier - s) {
        VertexSet t = s | VertexSet::single(w);
        if (seen.insert(t).second) stack.push_back(t);
      }
    }
    return out;
  }

 private:
  const DefiningGraph& g_;
  std::unordered_map<VertexSet, bool> connected_;
};

}  // namespace

bool chunk_check(const DefiningGraph& g, VertexSet s) {
  return ChunkSearch(g).eligible(s);
}

bool chunk_order_less(const DefiningGraph& g, VertexSet a, VertexSet b) {
  if (a.size() != b.size()) return a.size() > b.size();
  return g.names_of(a) < g.names_of(b);
}

std::vector<VertexSet> chunks(const DefiningGraph& g) {
  if (!is_connected(g, g.all())) throw ConstraintError("graph is disconnected");
  ChunkSearch search(g);
  std::vector<VertexSet> eligible;
  for (VertexSet s : search.connected_sets())
    if (search.eligible(s)) eligible.push_back(s);
  std::sort(eligible.begin(), eligible.end(), [](VertexSet a, VertexSet b) { return a.size() > b.size(); });
  std::vector<VertexSet> maximal;
  for (VertexSet s : eligible) {
    bool contained = std::any_of(maximal.begin(), maximal.end(), [&](VertexSet m) { return s.subset_of(m); });
    if (!contained) maximal.push_back(s);
  }
  std::sort(maximal.begin(), maximal.end(), [&](VertexSet a, VertexSet b) { return chunk_order_less(g, a, b); });
  return maximal;
}

}  // namespace defspace
