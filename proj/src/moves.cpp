#include "defspace/moves.hpp"

#include <algorithm>

#include "defspace/errors.hpp"

namespace defspace {

std::pair<int, int> collapse_endpoints(const GammaTree& k, int e) {
  if (e < 0 || e >= k.edge_count()) throw InvalidMove("no edge " + std::to_string(e));
  const auto& te = k.edge(e);
  const bool into_b = te.label == k.node_label(te.a);
  const bool into_a = te.label == k.node_label(te.b);
  if (!into_a && !into_b)
    throw InvalidMove("edge " + std::to_string(e) + " label " + k.graph().format(te.label) +
                      " equals neither endpoint label");
  if (into_a && into_b) return {std::min(te.a, te.b), std::max(te.a, te.b)};
  return into_b ? std::pair(te.b, te.a) : std::pair(te.a, te.b);
}

GammaTree collapse(const GammaTree& k, int e) {
  auto [keep, removed] = collapse_endpoints(k, e);
  auto renumber = [&](int v) {
    if (v == removed) v = keep;
    return v > removed ? v - 1 : v;
  };
  std::vector<VertexSet> nodes;
  for (int v = 0; v < k.node_count(); ++v)
    if (v != removed) nodes.push_back(k.node_label(v));
  std::vector<TreeEdge> edges;
  for (int f = 0; f < k.edge_count(); ++f) {
    if (f == e) continue;
    const auto& te = k.edge(f);
    edges.push_back({renumber(te.a), renumber(te.b), te.label});
  }
  return GammaTree(k.base_ptr(), std::move(nodes), std::move(edges));
}

ExpandMove inverse_of_collapse(const GammaTree& k, int e) {
  auto [keep, removed] = collapse_endpoints(k, e);
  ExpandMove m;
  m.node = keep > removed ? keep - 1 : keep;
  m.label = k.node_label(removed);
  for (int f = 0; f < k.edge_count(); ++f)
    if (f != e && k.edge(f).touches(removed)) m.transfer.push_back(f > e ? f - 1 : f);
  return m;
}

GammaTree expand(const GammaTree& k, const ExpandMove& m) {
  const auto& g = k.graph();
  if (m.node < 0 || m.node >= k.node_count()) throw InvalidMove("no node " + std::to_string(m.node));
  auto kind = shape_kind(g, m.label);
  if (kind != LabelKind::kCyclic && kind != LabelKind::kDihedral)
    throw InvalidMove("expansion label " + g.format(m.label) + " is neither cyclic nor dihedral");
  if (!m.label.subset_of(k.node_label(m.node)))
    throw InvalidMove("expansion label " + g.format(m.label) + " is not inside " + g.format(k.node_label(m.node)));
  std::vector<TreeEdge> edges = k.edges();
  std::vector<char> moved(edges.size(), 0);
  const int fresh = k.node_count();
  for (int f : m.transfer) {
    if (f < 0 || f >= k.edge_count() || !edges[f].touches(m.node))
      throw InvalidMove("edge " + std::to_string(f) + " is not incident to node " + std::to_string(m.node));
    if (moved[f]) throw InvalidMove("edge " + std::to_string(f) + " transferred twice");
    if (!edges[f].label.subset_of(m.label))
      throw InvalidMove("edge " + std::to_string(f) + " label " + g.format(edges[f].label) + " is not inside " +
                        g.format(m.label));
    moved[f] = 1;
    (edges[f].a == m.node ? edges[f].a : edges[f].b) = fresh;
  }
  std::vector<VertexSet> nodes = k.node_labels();
  nodes.push_back(m.label);
  edges.push_back({m.node, fresh, m.label});
  return GammaTree(k.base_ptr(), std::move(nodes), std::move(edges));
}

GammaTree slide(const GammaTree& k, int moved, int along) {
  if (moved < 0 || along < 0 || moved >= k.edge_count() || along >= k.edge_count())
    throw InvalidMove("no such edge");
  if (moved == along) throw InvalidMove("an edge cannot slide along itself");
  const auto& f = k.edge(moved);
  const auto& e = k.edge(along);
  int shared = e.touches(f.a) ? f.a : (e.touches(f.b) ? f.b : -1);
  if (shared < 0) throw InvalidMove("edges " + std::to_string(moved) + " and " + std::to_string(along) +
                                    " share no endpoint");
  if (!f.label.subset_of(e.label))
    throw InvalidMove("label " + k.graph().format(f.label) + " is not inside " + k.graph().format(e.label));
  std::vector<TreeEdge> edges = k.edges();
  (edges[moved].a == shared ? edges[moved].a : edges[moved].b) = e.other(shared);
  return GammaTree(k.base_ptr(), k.node_labels(), std::move(edges));
}

GammaTree apply(const GammaTree& k, const MoveDescriptor& m) {
  return std::visit(
      [&](const auto& move) -> GammaTree {
        using M = std::decay_t<decltype(move)>;
        if constexpr (std::is_same_v<M, CollapseMove>) return collapse(k, move.edge);
        else if constexpr (std::is_same_v<M, ExpandMove>) return expand(k, move);
        else return slide(k, move.moved, move.along);
      },
      m);
}

std::vector<ExpandMove> candidate_expansions(const GammaTree& k) {
  const auto& g = k.graph();
  std::vector<ExpandMove> out;
  for (int v = 0; v < k.node_count(); ++v) {
    const VertexSet at = k.node_label(v);
    std::vector<VertexSet> labels;
    for (int s : at) labels.push_back(VertexSet::single(s));
    for (int s : at)
      for (int t : g.neighbors(s) & at)
        if (s < t) labels.push_back(VertexSet::pair(s, t));
    const auto incident = k.incident_edges(v);
    for (VertexSet l : labels) {
      if (k.base().chunk_index(l)) continue;
      std::vector<int> eligible;
      for (int f : incident)
        if (k.edge(f).label.subset_of(l)) eligible.push_back(f);
      const std::uint32_t subsets = 1U << eligible.size();
      for (std::uint32_t mask = 0; mask < subsets; ++mask) {
        ExpandMove m{v, l, {}};
        for (std::size_t i = 0; i < eligible.size(); ++i)
          if ((mask >> i) & 1U) m.transfer.push_back(eligible[i]);
        out.push_back(std::move(m));
      }
    }
  }
  return out;
}

std::vector<SlideMove> candidate_slides(const GammaTree& k) {
  std::vector<SlideMove> out;
  for (int f = 0; f < k.edge_count(); ++f)
    for (int e = 0; e < k.edge_count(); ++e) {
      if (f == e) continue;
      const auto& fe = k.edge(f);
      const auto& ee = k.edge(e);
      if ((ee.touches(fe.a) || ee.touches(fe.b)) && fe.label.subset_of(ee.label)) out.push_back({f, e});
    }
  return out;
}

bool SurvivalOracle::survives(const GammaTree& k, int e) {
  if (k.reduced()) return true;
  auto key = canonical_tree_code(k, e);
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;
  bool result = false;
  for (int f = 0; f < k.edge_count() && !result; ++f) {
    if (f == e || !k.collapsible(f)) continue;
    result = survives(collapse(k, f), f < e ? e - 1 : e);
  }
  memo_.emplace(std::move(key), result);
  return result;
}

TreeStatus tree_status(const GammaTree& k, SurvivalOracle& oracle) {
  TreeStatus status;
  status.reduced = k.reduced();
  for (int e = 0; e < k.edge_count(); ++e)
    if (oracle.survives(k, e)) status.surviving_edges.push_back(e);
  status.surviving = static_cast<int>(status.surviving_edges.size()) == k.edge_count();
  return status;
}

TreeStatus tree_status(const GammaTree& k) {
  SurvivalOracle oracle;
  return tree_status(k, oracle);
}

}  // namespace defspace
