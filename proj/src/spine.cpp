#include "defspace/spine.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "defspace/errors.hpp"
#include "defspace/moves.hpp"

namespace defspace {
namespace {

void require_splittable(const SplittingBase& base) {
  auto flags = classify(base.graph());
  if (!flags.connected) throw ConstraintError("defining graph is disconnected");
  if (!flags.large_type) throw ConstraintError("defining graph is not large-type");
}

// Spanning trees of the chunk intersection graph, as edge lists.
class SpanningTrees {
 public:
  explicit SpanningTrees(const std::vector<VertexSet>& chunks) : n_(static_cast<int>(chunks.size())) {
    for (int i = 0; i < n_; ++i)
      for (int j = i + 1; j < n_; ++j)
        if (chunks[i].intersects(chunks[j])) pairs_.push_back({i, j, chunks[i] & chunks[j]});
  }

  template <class Fn>
  void each(Fn&& fn) {
    std::vector<int> comp(n_);
    for (int i = 0; i < n_; ++i) comp[i] = i;
    std::vector<TreeEdge> chosen;
    walk(0, comp, chosen, fn);
  }

 private:
  template <class Fn>
  void walk(std::size_t at, std::vector<int>& comp, std::vector<TreeEdge>& chosen, Fn& fn) {
    const std::size_t need = static_cast<std::size_t>(n_ - 1);
    if (chosen.size() == need) {
      fn(chosen);
      return;
    }
    if (pairs_.size() - at < need - chosen.size()) return;
    const auto& p = pairs_[at];
    if (comp[p.a] != comp[p.b]) {
      auto saved = comp;
      const int from = comp[p.b];
      for (int& c : comp)
        if (c == from) c = comp[p.a];
      chosen.push_back(p);
      walk(at + 1, comp, chosen, fn);
      chosen.pop_back();
      comp = std::move(saved);
    }
    walk(at + 1, comp, chosen, fn);
  }

  int n_;
  std::vector<TreeEdge> pairs_;
};

Enumeration finish(std::map<CanonicalCode, GammaTree>& found, int max_extra, int node_cap) {
  Enumeration e;
  e.max_extra = max_extra;
  e.node_cap = node_cap;
  for (auto& [code, tree] : found) {
    e.codes.push_back(code);
    e.trees.push_back(std::move(tree));
  }
  return e;
}

std::map<CanonicalCode, GammaTree> reduced_classes(const std::shared_ptr<const SplittingBase>& base) {
  std::map<CanonicalCode, GammaTree> found;
  SpanningTrees(base->chunks()).each([&](const std::vector<TreeEdge>& edges) {
    GammaTree k(base, base->chunks(), edges);
    if (is_gamma_tree(k)) found.try_emplace(canonical_tree_code(k), std::move(k));
  });
  return found;
}

int longest_chain(int n, const std::vector<std::pair<int, int>>& relation) {
  std::vector<std::vector<int>> down(n);
  for (auto [a, b] : relation) down[a].push_back(b);
  std::vector<int> depth(n, -1);
  // Collapses strictly lower the node count, so the relation is acyclic.
  auto visit = [&](auto& self, int v) -> int {
    if (depth[v] >= 0) return depth[v];
    int best = 0;
    for (int w : down[v]) best = std::max(best, 1 + self(self, w));
    return depth[v] = best;
  };
  int best = 0;
  for (int v = 0; v < n; ++v) best = std::max(best, visit(visit, v));
  return best;
}

}  // namespace

int default_max_extra(const SplittingBase& base) {
  const long long i = static_cast<long long>(base.chunks().size());
  if (i <= 1) return 0;
  const long long v = base.graph().vertex_count();
  const long long bound = i * (i - 1) / 2 * (2 * (i - 2) + 2 * v);
  return static_cast<int>(std::min<long long>(bound, 1'000'000));
}

Enumeration enumerate_reduced_gamma_trees(const std::shared_ptr<const SplittingBase>& base) {
  require_splittable(*base);
  auto found = reduced_classes(base);
  const int n = static_cast<int>(base->chunks().size());
  return finish(found, 0, n);
}

Enumeration enumerate_gamma_trees(const std::shared_ptr<const SplittingBase>& base,
                                  const EnumerationOptions& options) {
  require_splittable(*base);
  const int max_extra = options.max_extra.value_or(default_max_extra(*base));
  if (max_extra < 0) throw InvalidInput("max_extra must be non-negative");
  const int node_cap = static_cast<int>(base->chunks().size()) + max_extra;

  auto found = reduced_classes(base);
  std::vector<const GammaTree*> queue;
  for (auto& [code, tree] : found) queue.push_back(&tree);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const GammaTree& k = *queue[head];
    if (k.node_count() >= node_cap) continue;
    for (const auto& m : candidate_expansions(k)) {
      GammaTree next = expand(k, m);
      if (!is_gamma_tree(next)) continue;
      auto [it, fresh] = found.try_emplace(canonical_tree_code(next), std::move(next));
      if (!fresh) continue;
      if (found.size() > options.class_cap)
        throw LimitExceeded("more than " + std::to_string(options.class_cap) + " Gamma-tree classes");
      queue.push_back(&it->second);
    }
  }
  return finish(found, max_extra, node_cap);
}

std::optional<int> find_class(const Enumeration& e, const GammaTree& k) {
  auto code = canonical_tree_code(k);
  auto it = std::lower_bound(e.codes.begin(), e.codes.end(), code);
  if (it == e.codes.end() || *it != code) return std::nullopt;
  return static_cast<int>(it - e.codes.begin());
}

bool connected_among(const std::vector<std::vector<int>>& adjacency, const std::vector<int>& members) {
  if (members.empty()) return true;
  std::set<int> allowed(members.begin(), members.end());
  std::set<int> seen{members.front()};
  std::vector<int> stack{members.front()};
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : adjacency[v])
      if (allowed.count(w) && seen.insert(w).second) stack.push_back(w);
  }
  return seen.size() == allowed.size();
}

SpineReport spine(const std::shared_ptr<const SplittingBase>& base, const EnumerationOptions& options) {
  SpineReport r;
  r.enumeration = enumerate_gamma_trees(base, options);
  r.graph_code = canonical_graph_code(base->graph());
  const auto& trees = r.enumeration.trees;
  const int n = static_cast<int>(trees.size());

  SurvivalOracle oracle;
  r.status.resize(n);
  for (int i = 0; i < n; ++i) {
    auto st = tree_status(trees[i], oracle);
    r.status[i] = {st.reduced, st.surviving, st.surviving_edges};
    if (st.reduced) r.reduced.push_back(i);
    if (st.surviving) r.surviving.push_back(i);
  }

  r.slide_graph.assign(n, {});
  for (int i : r.reduced) {
    std::set<int> near;
    for (const auto& s : candidate_slides(trees[i])) {
      auto j = find_class(r.enumeration, slide(trees[i], s.moved, s.along));
      if (j && *j != i && r.status[*j].reduced) near.insert(*j);
    }
    for (int j : near) {
      r.slide_graph[i].push_back(j);
      r.slide_graph[j].push_back(i);
    }
  }
  for (auto& adj : r.slide_graph) {
    std::sort(adj.begin(), adj.end());
    adj.erase(std::unique(adj.begin(), adj.end()), adj.end());
  }
  r.slide_graph_connected = connected_among(r.slide_graph, r.reduced);

  std::set<std::pair<int, int>> relation;
  for (int i : r.surviving)
    for (int e = 0; e < trees[i].edge_count(); ++e) {
      if (!trees[i].collapsible(e)) continue;
      auto j = find_class(r.enumeration, collapse(trees[i], e));
      if (j && r.status[*j].surviving) relation.insert({i, *j});
    }
  r.collapse_poset.assign(relation.begin(), relation.end());
  r.dimension = longest_chain(n, r.collapse_poset);
  return r;
}

SpineReport spine(const DefiningGraph& g, const EnumerationOptions& options) {
  return spine(SplittingBase::make(g), options);
}

}  // namespace defspace
