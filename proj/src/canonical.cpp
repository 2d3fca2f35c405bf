#include <algorithm>
#include <map>
#include <numeric>

#include "defspace/defining_graph.hpp"

namespace defspace {
namespace {

constexpr int kExhaustiveLimit = 8;

// Colour refinement on (degree, sorted incident labels), then iterated on
// neighbour colours. Colours are ranks of sorted signatures, so the result is
// invariant under relabeling.
std::vector<int> refine_colours(const DefiningGraph& g) {
  const int n = g.vertex_count();
  std::vector<std::vector<int>> signature(n);
  for (int v = 0; v < n; ++v) {
    for (int w : g.neighbors(v)) signature[v].push_back(g.label(v, w));
    std::sort(signature[v].begin(), signature[v].end());
    signature[v].insert(signature[v].begin(), g.neighbors(v).size());
  }
  auto rank = [&](const std::vector<std::vector<int>>& sig) {
    std::vector<std::vector<int>> sorted = sig;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::vector<int> colour(n);
    for (int v = 0; v < n; ++v)
      colour[v] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), sig[v]) - sorted.begin());
    return std::pair(colour, static_cast<int>(sorted.size()));
  };
  auto [colour, classes] = rank(signature);
  while (true) {
    std::vector<std::vector<int>> next(n);
    for (int v = 0; v < n; ++v) {
      std::vector<std::pair<int, int>> around;
      for (int w : g.neighbors(v)) around.emplace_back(g.label(v, w), colour[w]);
      std::sort(around.begin(), around.end());
      next[v].push_back(colour[v]);
      for (auto [l, c] : around) {
        next[v].push_back(l);
        next[v].push_back(c);
      }
    }
    auto [refined, refined_classes] = rank(next);
    colour = std::move(refined);
    if (refined_classes == classes) break;
    classes = refined_classes;
  }
  return colour;
}

// Lexicographically least adjacency code over the vertex orderings allowed
// by `cell_of_position`: position i may hold any vertex whose colour equals
// cell_of_position[i]. Row i of the code lists label(order[i], order[j]) for j < i.
class OrderSearch {
 public:
  OrderSearch(const DefiningGraph& g, std::vector<int> colour) : g_(g), colour_(std::move(colour)) {
    n_ = g.vertex_count();
    position_colour_ = colour_;
    std::sort(position_colour_.begin(), position_colour_.end());
    order_.resize(n_);
    rows_.resize(n_);
    status_.resize(n_ + 1, Status::kEqual);
  }

  std::vector<int> run() {
    descend(0, VertexSet{});
    return best_order_;
  }

 private:
  enum class Status { kEqual, kLess };

  void descend(int depth, VertexSet used) {
    if (depth == n_) {
      if (best_order_.empty() || status_[depth] == Status::kLess) {
        best_order_ = order_;
        best_rows_ = rows_;
        std::fill(status_.begin(), status_.end(), Status::kEqual);
      }
      return;
    }
    for (int v = 0; v < n_; ++v) {
      if (used.contains(v) || colour_[v] != position_colour_[depth]) continue;
      auto& row = rows_[depth];
      row.clear();
      for (int j = 0; j < depth; ++j) row.push_back(g_.label(v, order_[j]));
      Status s = status_[depth];
      if (!best_order_.empty() && s == Status::kEqual) {
        if (row > best_rows_[depth]) continue;
        if (row < best_rows_[depth]) s = Status::kLess;
      }
      if (best_order_.empty()) s = Status::kLess;
      status_[depth + 1] = s;
      order_[depth] = v;
      descend(depth + 1, used | VertexSet::single(v));
    }
  }

  const DefiningGraph& g_;
  std::vector<int> colour_;
  std::vector<int> position_colour_;
  int n_ = 0;
  std::vector<int> order_;
  std::vector<std::vector<int>> rows_;
  std::vector<Status> status_;
  std::vector<int> best_order_;
  std::vector<std::vector<int>> best_rows_;
};

}  // namespace

std::vector<int> canonical_vertex_order(const DefiningGraph& g) {
  std::vector<int> colour(g.vertex_count(), 0);
  if (g.vertex_count() > kExhaustiveLimit) colour = refine_colours(g);
  return OrderSearch(g, std::move(colour)).run();
}

CanonicalCode canonical_graph_code(const DefiningGraph& g) {
  auto order = canonical_vertex_order(g);
  std::string out = "G" + std::to_string(g.vertex_count()) + ":";
  for (std::size_t i = 1; i < order.size(); ++i) {
    if (i > 1) out += '/';
    for (std::size_t j = 0; j < i; ++j) {
      if (j > 0) out += '.';
      out += std::to_string(g.label(order[i], order[j]));
    }
  }
  return {out};
}

}  // namespace defspace
