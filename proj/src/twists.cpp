#include "defspace/twists.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "defspace/chunks.hpp"
#include "defspace/errors.hpp"

namespace defspace {

std::vector<TwistMove> twist_moves(const DefiningGraph& g) {
  std::vector<TwistMove> out;
  for (int s = 0; s < g.vertex_count(); ++s) {
    const VertexSet rest = g.all() - VertexSet::single(s);
    auto parts = components(g, rest);
    if (parts.size() < 2) continue;
    for (VertexSet b : parts) {
      const VertexSet allowed = g.all() - b;
      for (int t : odd_reachable(g, s, allowed) - VertexSet::single(s))
        out.push_back({s, t, b, odd_path(g, s, t, allowed)});
    }
  }
  return out;
}

DefiningGraph apply_twist(const DefiningGraph& g, const TwistMove& m) {
  const int n = g.vertex_count();
  if (m.source < 0 || m.source >= n || m.target < 0 || m.target >= n)
    throw InvalidMove("twist endpoints out of range");
  const VertexSet rest = g.all() - VertexSet::single(m.source);
  auto parts = components(g, rest);
  if (parts.size() < 2 || std::find(parts.begin(), parts.end(), m.branch) == parts.end())
    throw InvalidMove("branch is not a component of the graph minus " + g.name(m.source));
  if (m.branch.contains(m.target) || m.target == m.source ||
      !odd_reachable(g, m.source, g.all() - m.branch).contains(m.target))
    throw InvalidMove(g.name(m.target) + " is not reached from " + g.name(m.source) +
                      " by an odd path avoiding the branch");
  std::vector<NamedEdge> edges;
  for (const auto& e : g.edges()) {
    int a = e.a;
    int b = e.b;
    if (a == m.source && m.branch.contains(b)) a = m.target;
    if (b == m.source && m.branch.contains(a)) b = m.target;
    edges.push_back({g.name(a), g.name(b), e.label});
  }
  return DefiningGraph::build(g.names(), edges);
}

TwistOrbit twist_orbit(const DefiningGraph& g, std::size_t node_cap) {
  TwistOrbit orbit;
  std::map<CanonicalCode, int> index;
  orbit.representatives.push_back(g);
  orbit.codes.push_back(canonical_graph_code(g));
  index.emplace(orbit.codes.front(), 0);
  std::set<std::pair<int, int>> linked;
  for (std::size_t head = 0; head < orbit.representatives.size(); ++head) {
    const DefiningGraph current = orbit.representatives[head];
    for (const auto& m : twist_moves(current)) {
      DefiningGraph next = apply_twist(current, m);
      auto code = canonical_graph_code(next);
      auto it = index.find(code);
      if (it == index.end()) {
        if (orbit.representatives.size() >= node_cap) {
          orbit.truncated = true;
          continue;
        }
        it = index.emplace(code, static_cast<int>(orbit.representatives.size())).first;
        orbit.representatives.push_back(std::move(next));
        orbit.codes.push_back(std::move(code));
      }
      const int from = static_cast<int>(head);
      if (it->second != from && linked.insert({from, it->second}).second)
        orbit.edges.push_back({from, it->second, m});
    }
  }
  return orbit;
}

GarsideCentral garside_central(const DefiningGraph& g, int s, int t) {
  const int m = g.label(s, t);
  if (m == 0) throw InvalidInput("no edge " + g.name(s) + " " + g.name(t));
  return {VertexSet::pair(s, t), m, m % 2 == 0 ? 1 : 2};
}

DihedralOut out_dihedral(int m) {
  if (m < 3) throw InvalidInput("label " + std::to_string(m) + " < 3");
  DihedralOut out;
  out.m = m;
  out.even = m % 2 == 0;
  if (!out.even) {
    out.group = "C2";
    out.generators.push_back({"iota", "a -> a^-1, b -> b^-1", "global inversion"});
    return out;
  }
  const int n = m / 2;
  out.group = "C2 x D_inf";
  out.presentation = "<x, t | x^" + std::to_string(n) + " = t x^" + std::to_string(n) + " t^-1>, b = t, a = x t^-1";
  out.generators.push_back({"alpha", "x -> x^-1, t -> t", "C2 factor"});
  out.generators.push_back({"beta", "x -> x, t -> t^-1", "D_inf generator"});
  out.generators.push_back({"gamma", "x -> x, t -> t x", "D_inf generator"});
  return out;
}

const char* to_string(FactorKind k) {
  switch (k) {
    case FactorKind::kEdgeCyclic: return "edge-cyclic";
    case FactorKind::kVertexCentral: return "vertex-central";
    case FactorKind::kSymbolicFree: return "symbolic-free";
  }
  return "?";
}

namespace {

std::string element_name(const DefiningGraph& g, VertexSet element, int power) {
  if (element.size() == 1) return g.name(element.lowest());
  std::string out = "D" + g.format(element);
  return power == 1 ? out : out + "^" + std::to_string(power);
}

}  // namespace

RaagPresentation stabilizer_presentation(const GammaTree& k) {
  if (!is_gamma_tree(k)) throw InvalidInput("tree is not a valid Gamma-tree");
  if (!k.reduced()) throw ConstraintError("tree is not reduced");
  const auto& g = k.graph();
  RaagPresentation p;

  auto add = [&](int e, int origin, FactorKind kind, VertexSet element, int power) {
    const int other = k.edge(e).other(origin);
    std::string name = kind == FactorKind::kSymbolicFree
                           ? "F" + g.format(k.node_label(origin)) + "(" + g.name(element.lowest()) + ")"
                           : element_name(g, element, power);
    name += "@" + std::to_string(origin) + ">" + std::to_string(other);
    p.ambient.push_back({name, e, origin, kind, element, power});
    return static_cast<int>(p.ambient.size()) - 1;
  };

  std::vector<std::vector<int>> centres(k.node_count());
  std::vector<std::vector<int>> edge_coords(k.edge_count());
  for (int e = 0; e < k.edge_count(); ++e) {
    const auto& te = k.edge(e);
    for (int origin : {te.a, te.b}) {
      const VertexSet o = k.node_label(origin);
      if (te.label.size() == 2) {
        const auto gc = garside_central(g, te.label.lowest(), (te.label - VertexSet::single(te.label.lowest())).lowest());
        edge_coords[e].push_back(add(e, origin, FactorKind::kEdgeCyclic, gc.pair, gc.power));
        continue;
      }
      edge_coords[e].push_back(add(e, origin, FactorKind::kEdgeCyclic, te.label, 1));
      if (shape_kind(g, o) == LabelKind::kDihedral) {
        const auto gc = garside_central(g, o.lowest(), (o - VertexSet::single(o.lowest())).lowest());
        centres[origin].push_back(add(e, origin, FactorKind::kVertexCentral, gc.pair, gc.power));
      } else {
        add(e, origin, FactorKind::kSymbolicFree, te.label, 1);
        p.exact = false;
      }
    }
  }

  std::vector<char> gone(p.ambient.size(), 0);
  for (int v = 0; v < k.node_count(); ++v) {
    if (centres[v].empty()) continue;
    p.identifications.push_back({"vertex-centre", v, -1, centres[v], centres[v].back()});
    gone[centres[v].back()] = 1;
  }
  for (int e = 0; e < k.edge_count(); ++e) {
    const auto& te = k.edge(e);
    auto names_a = g.names_of(k.node_label(te.a));
    auto names_b = g.names_of(k.node_label(te.b));
    const bool a_positive = names_a < names_b || (names_a == names_b && te.a < te.b);
    // edge_coords[e] = {coordinate at a, coordinate at b}
    const int kept = a_positive ? edge_coords[e][0] : edge_coords[e][1];
    const int dropped = a_positive ? edge_coords[e][1] : edge_coords[e][0];
    p.identifications.push_back({"edge-diagonal", -1, e, {kept, dropped}, dropped});
    gone[dropped] = 1;
  }
  for (int i = 0; i < static_cast<int>(p.ambient.size()); ++i)
    if (!gone[i] && p.ambient[i].kind != FactorKind::kSymbolicFree) p.generators.push_back(i);
  for (std::size_t i = 0; i < p.generators.size(); ++i)
    for (std::size_t j = i + 1; j < p.generators.size(); ++j) p.commutation.push_back({p.generators[i], p.generators[j]});
  if (p.exact) p.free_abelian_rank = static_cast<int>(p.generators.size());
  return p;
}

}  // namespace defspace
