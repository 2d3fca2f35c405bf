#include <random>
#include <set>

#include "doctest.h"
#include "fixtures.hpp"
#include "oracles.hpp"

#include "defspace/chunks.hpp"
#include "defspace/errors.hpp"
#include "defspace/spine.hpp"
#include "defspace/twists.hpp"

using namespace defspace;

namespace {

std::multiset<int> label_multiset(const DefiningGraph& g) {
  std::multiset<int> out;
  for (const auto& e : g.edges()) out.insert(e.label);
  return out;
}

std::multiset<std::string> chunk_codes(const DefiningGraph& g) {
  std::multiset<std::string> out;
  for (auto c : chunks(g)) out.insert(canonical_graph_code(g.induced(c)).bytes);
  return out;
}

std::vector<int> degrees(const DefiningGraph& g) {
  std::vector<int> d;
  for (int v = 0; v < g.vertex_count(); ++v) d.push_back(g.neighbors(v).size());
  std::sort(d.begin(), d.end());
  return d;
}

DefiningGraph random_tree(std::mt19937_64& rng, int max_vertices) {
  const int n = std::uniform_int_distribution<int>(2, max_vertices)(rng);
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.push_back("t" + std::to_string(i));
  std::vector<NamedEdge> edges;
  for (int v = 1; v < n; ++v)
    edges.push_back({names[std::uniform_int_distribution<int>(0, v - 1)(rng)], names[v],
                     std::uniform_int_distribution<int>(3, 7)(rng)});
  return DefiningGraph::build(names, edges);
}

}  // namespace

TEST_CASE("twist orbit examples") {
  auto s3 = twist_orbit(fixture("star3_3"));
  CHECK(s3.representatives.size() == 2);
  CHECK_FALSE(s3.truncated);
  std::set<std::vector<int>> shapes;
  for (const auto& g : s3.representatives) {
    CHECK(g.edge_count() == 3);
    CHECK(label_multiset(g) == std::multiset<int>{3, 3, 3});
    shapes.insert(degrees(g));
  }
  CHECK(shapes == std::set<std::vector<int>>{{1, 1, 1, 3}, {1, 1, 2, 2}});

  auto s4 = twist_orbit(fixture("star4_3"));
  CHECK(s4.representatives.size() == 3);
  auto p44 = twist_orbit(fixture("p3_44"));
  CHECK(p44.representatives.size() == 1);
  CHECK(p44.edges.empty());
  CHECK(twist_moves(fixture("p3_44")).empty());
  CHECK(twist_orbit(fixture("tri")).representatives.size() == 1);
}

TEST_CASE("twist orbit truncation") {
  auto o = twist_orbit(fixture("star4_3"), 2);
  CHECK(o.truncated);
  CHECK(o.representatives.size() == 2);
}

TEST_CASE("twist moves carry provenance") {
  auto g = fixture("star3_3");
  auto moves = twist_moves(g);
  CHECK_FALSE(moves.empty());
  for (const auto& m : moves) {
    CHECK(g.name(m.source) == "c");
    CHECK(m.odd_path.front() == m.source);
    CHECK(m.odd_path.back() == m.target);
    CHECK_FALSE(m.branch.contains(m.target));
    for (std::size_t i = 1; i < m.odd_path.size(); ++i) {
      CHECK(g.label(m.odd_path[i - 1], m.odd_path[i]) % 2 == 1);
      CHECK_FALSE(m.branch.contains(m.odd_path[i]));
    }
  }
  auto path = fixture("p3_33");
  TwistMove bad{path.index("b"), path.index("a"), path.set_of({"a"}), {}};
  CHECK_THROWS_AS(apply_twist(path, bad), InvalidMove);
  TwistMove not_branch{path.index("b"), path.index("c"), path.set_of({"a", "c"}), {}};
  CHECK_THROWS_AS(apply_twist(path, not_branch), InvalidMove);
  TwistMove rooted{path.index("a"), path.index("c"), path.set_of({"b"}), {}};
  CHECK_THROWS_AS(apply_twist(path, rooted), InvalidMove);
}

TEST_CASE("a twist needs an odd path avoiding the branch") {
  auto g = parse_defining_graph("edge c x 3\nedge c y 4\nedge y z 3");
  for (const auto& m : twist_moves(g)) {
    if (g.name(m.source) != "c") continue;
    CHECK(g.name(m.target) != "y");
    CHECK(g.name(m.target) != "z");
  }
}

TEST_CASE("twist invariants on random graphs") {
  std::mt19937_64 rng(51);
  for (int trial = 0; trial < 150; ++trial) {
    auto g = oracle::random_connected(rng, 7);
    auto flags = classify(g);
    auto o = twist_orbit(g, 2000);
    REQUIRE_FALSE(o.truncated);
    std::set<CanonicalCode> members(o.codes.begin(), o.codes.end());
    for (const auto& h : o.representatives) {
      CHECK(h.vertex_count() == g.vertex_count());
      CHECK(label_multiset(h) == label_multiset(g));
      auto f = classify(h);
      CHECK(f.connected);
      CHECK(f.large_type == flags.large_type);
      CHECK(f.xxxl == flags.xxxl);
      CHECK(f.triangle_free == flags.triangle_free);
      CHECK(chunk_codes(h) == chunk_codes(g));
      for (const auto& m : twist_moves(h)) CHECK(members.count(canonical_graph_code(apply_twist(h, m))) == 1);
    }
  }
}

TEST_CASE("orbit members have Gamma-trees with the same chunk shapes") {
  std::mt19937_64 rng(52);
  for (int trial = 0; trial < 40; ++trial) {
    auto g = oracle::random_connected(rng, 6);
    for (const auto& h : twist_orbit(g).representatives) {
      auto b = SplittingBase::make(h);
      auto e = enumerate_reduced_gamma_trees(b);
      REQUIRE_FALSE(e.trees.empty());
      std::multiset<std::string> seen;
      for (auto c : elliptic_chunk_sets(e.trees.front())) seen.insert(canonical_graph_code(h.induced(c)).bytes);
      CHECK(seen == chunk_codes(g));
    }
  }
}

TEST_CASE("outer automorphisms of dihedral Artin groups") {
  for (int m = 3; m <= 12; ++m) {
    auto d = out_dihedral(m);
    CHECK(d.m == m);
    CHECK(d.even == (m % 2 == 0));
    CHECK(d.group == (m % 2 == 1 ? "C2" : "C2 x D_inf"));
    CHECK(d.generators.size() == (m % 2 == 1 ? 1u : 3u));
    if (d.even) CHECK(d.presentation.find("x^" + std::to_string(m / 2)) != std::string::npos);
  }
  CHECK_THROWS_AS(out_dihedral(2), InvalidInput);
  CHECK_THROWS_AS(out_dihedral(-5), InvalidInput);
}

TEST_CASE("Garside centre powers") {
  auto g = parse_defining_graph("edge a b 3\nedge b c 4");
  CHECK(garside_central(g, 0, 1).power == 2);
  CHECK(garside_central(g, 1, 2).power == 1);
  CHECK(garside_central(g, 2, 1).m == 4);
  CHECK_THROWS_AS(garside_central(g, 0, 2), InvalidInput);
}

TEST_CASE("stabilizer presentation examples") {
  auto p = build_t_gamma(SplittingBase::make(fixture("p3_33")));
  auto sp = stabilizer_presentation(p);
  CHECK(sp.exact);
  CHECK(sp.ambient.size() == 4);
  REQUIRE(sp.free_abelian_rank.has_value());
  CHECK(*sp.free_abelian_rank == 1);
  CHECK(sp.identifications.size() == 3);

  auto star = SplittingBase::make(fixture("star3_3"));
  const auto& g = star->graph();
  GammaTree path(star, {g.set_of({"c", "x"}), g.set_of({"c", "y"}), g.set_of({"c", "z"})},
                 {{0, 1, g.set_of({"c"})}, {0, 2, g.set_of({"c"})}});
  auto ss = stabilizer_presentation(path);
  CHECK(ss.exact);
  CHECK(ss.ambient.size() == 8);
  CHECK(*ss.free_abelian_rank == 3);
  CHECK(ss.commutation.size() == 3);

  auto tt = build_t_gamma(SplittingBase::make(fixture("two_triangles")));
  auto fs = stabilizer_presentation(tt);
  CHECK_FALSE(fs.exact);
  CHECK_FALSE(fs.free_abelian_rank.has_value());
  int pq = 0, symbolic = 0;
  for (const auto& a : fs.ambient) {
    if (a.element.size() == 2 && a.kind == FactorKind::kEdgeCyclic) {
      ++pq;
      CHECK(a.power == 2);
    }
    if (a.kind == FactorKind::kSymbolicFree) {
      ++symbolic;
      CHECK(tt.node_label(a.origin).size() == 3);
    }
  }
  CHECK(pq == 2);
  CHECK(symbolic == 2);

  GammaTree hub(star, {g.set_of({"c"}), g.set_of({"c", "x"}), g.set_of({"c", "y"}), g.set_of({"c", "z"})},
                {{0, 1, g.set_of({"c"})}, {0, 2, g.set_of({"c"})}, {0, 3, g.set_of({"c"})}});
  CHECK_THROWS_AS(stabilizer_presentation(hub), ConstraintError);
  GammaTree broken(star, {g.set_of({"c", "x"}), g.set_of({"c", "y"})}, {{0, 1, g.set_of({"c"})}});
  CHECK_THROWS_AS(stabilizer_presentation(broken), InvalidInput);
}

TEST_CASE("stabilizer ranks agree with the lattice oracle") {
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 200; ++trial) {
    auto g = random_tree(rng, 7);
    auto e = enumerate_reduced_gamma_trees(SplittingBase::make(g));
    for (const auto& k : e.trees) {
      auto p = stabilizer_presentation(k);
      REQUIRE(p.exact);
      auto [rank, free] = oracle::stabilizer_rank(k);
      CHECK(free);
      CHECK(*p.free_abelian_rank == rank);
      CHECK(rank == (k.edge_count() == 0 ? 0 : 2 * 2 * k.edge_count() - (k.node_count() + k.edge_count())));
    }
  }
}

TEST_CASE("Smith invariants") {
  CHECK(oracle::smith_invariants({{2, 4}, {6, 8}}) == std::vector<long long>{2, 4});
  CHECK(oracle::smith_invariants({{1, -1, 0}, {0, 1, 1}}) == std::vector<long long>{1, 1});
  CHECK(oracle::smith_invariants({{0, 0}}).empty());
}
