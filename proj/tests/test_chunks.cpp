#include <random>

#include "doctest.h"
#include "fixtures.hpp"
#include "oracles.hpp"

#include "defspace/chunks.hpp"
#include "defspace/errors.hpp"

using namespace defspace;

namespace {

std::vector<std::string> formatted(const DefiningGraph& g, const std::vector<VertexSet>& cs) {
  std::vector<std::string> out;
  for (auto c : cs) out.push_back(g.format(c));
  return out;
}

void check_structure(const DefiningGraph& g, const std::vector<VertexSet>& cs) {
  for (const auto& e : g.edges()) {
    auto pair = VertexSet::pair(e.a, e.b);
    CHECK(std::any_of(cs.begin(), cs.end(), [&](VertexSet c) { return pair.subset_of(c); }));
  }
  for (std::size_t i = 0; i < cs.size(); ++i)
    for (std::size_t j = i + 1; j < cs.size(); ++j) {
      auto common = cs[i] & cs[j];
      CHECK(common.size() <= 2);
      if (common.size() == 2) CHECK(g.adjacent(common.lowest(), (common - VertexSet::single(common.lowest())).lowest()));
    }
}

}  // namespace

TEST_CASE("separating simplices") {
  auto tri = fixture("tri");
  CHECK_FALSE(is_separating(tri, Simplex::vertex(tri.index("a"))));
  auto p33 = fixture("p3_33");
  CHECK(is_separating(p33, Simplex::vertex(p33.index("b"))));
  CHECK_FALSE(is_separating(p33, Simplex::vertex(p33.index("a"))));
  auto tt = fixture("two_triangles");
  CHECK(is_separating(tt, Simplex::edge(tt.index("p"), tt.index("q"))));
  CHECK_FALSE(is_separating(tt, Simplex::edge(tt.index("p"), tt.index("r"))));
  auto e4 = fixture("e4");
  CHECK_FALSE(is_separating(e4, Simplex::edge(0, 1)));
  CHECK_THROWS_AS(is_separating(p33, Simplex::edge(p33.index("a"), p33.index("c"))), InvalidInput);
  CHECK_THROWS_AS(is_separating(p33, Simplex::vertex(7)), InvalidInput);
}

TEST_CASE("chunk examples") {
  auto p33 = fixture("p3_33");
  CHECK(formatted(p33, chunks(p33)) == std::vector<std::string>{"{a,b}", "{b,c}"});
  auto tri = fixture("tri");
  CHECK(formatted(tri, chunks(tri)) == std::vector<std::string>{"{a,b,c}"});
  auto tt = fixture("two_triangles");
  auto cs = formatted(tt, chunks(tt));
  std::sort(cs.begin(), cs.end());
  CHECK(cs == std::vector<std::string>{"{g,q}", "{p,q,r}", "{p,q,s}", "{q,y}"});
  CHECK(formatted(tt, chunks(tt)).front() == "{p,q,r}");
  auto single = parse_defining_graph("vertex v");
  CHECK(formatted(single, chunks(single)) == std::vector<std::string>{"{v}"});
  CHECK_THROWS_AS(chunks(fixture("disconnected")), ConstraintError);
}

TEST_CASE("chunk check") {
  auto tt = fixture("two_triangles");
  CHECK(chunk_check(tt, tt.set_of({"p", "q", "r"})));
  CHECK(chunk_check(tt, tt.set_of({"q", "y"})));
  CHECK_FALSE(chunk_check(tt, tt.set_of({"p", "q", "r", "s"})));
  CHECK_FALSE(chunk_check(tt, tt.set_of({"y", "g"})));
}

TEST_CASE("chunks agree with brute force and satisfy cover and intersection bounds") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 500; ++trial) {
    auto g = oracle::random_connected(rng, 7, 2, 7);
    auto cs = chunks(g);
    std::vector<std::uint64_t> got;
    for (auto c : cs) got.push_back(c.bits());
    std::sort(got.begin(), got.end());
    CHECK(got == oracle::brute_chunks(g));
    check_structure(g, cs);
    for (std::size_t i = 1; i < cs.size(); ++i) CHECK(chunk_order_less(g, cs[i - 1], cs[i]));
  }
}

TEST_CASE("edges on no cycle are chunks") {
  std::mt19937_64 rng(22);
  for (int trial = 0; trial < 200; ++trial) {
    // random tree
    std::uniform_int_distribution<int> count(2, 9);
    const int n = count(rng);
    std::vector<std::string> names;
    for (int i = 0; i < n; ++i) names.push_back("t" + std::to_string(i));
    std::vector<NamedEdge> edges;
    for (int v = 1; v < n; ++v) edges.push_back({names[std::uniform_int_distribution<int>(0, v - 1)(rng)], names[v], 3});
    auto g = DefiningGraph::build(names, edges);
    auto cs = chunks(g);
    CHECK(cs.size() == g.edges().size());
    for (const auto& e : g.edges()) CHECK(std::find(cs.begin(), cs.end(), VertexSet::pair(e.a, e.b)) != cs.end());
  }
}
