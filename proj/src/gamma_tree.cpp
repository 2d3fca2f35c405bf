#include "defspace/gamma_tree.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <numeric>
#include <set>

#include "defspace/errors.hpp"

namespace defspace {

SplittingBase::SplittingBase(DefiningGraph g) : graph_(std::move(g)) {
  chunks_ = defspace::chunks(graph_);
  large_type_ = classify(graph_).large_type;
}

std::shared_ptr<const SplittingBase> SplittingBase::make(DefiningGraph g) {
  return std::shared_ptr<const SplittingBase>(new SplittingBase(std::move(g)));
}

std::optional<int> SplittingBase::chunk_index(VertexSet s) const {
  for (std::size_t i = 0; i < chunks_.size(); ++i)
    if (chunks_[i] == s) return static_cast<int>(i);
  return std::nullopt;
}

const char* to_string(LabelKind k) {
  switch (k) {
    case LabelKind::kChunk: return "chunk";
    case LabelKind::kCyclic: return "cyclic";
    case LabelKind::kDihedral: return "dihedral";
    case LabelKind::kOther: return "other";
  }
  return "other";
}

const char* to_string(Clause c) {
  switch (c) {
    case Clause::kNotATree: return "tree";
    case Clause::kContainment: return "containment";
    case Clause::kSupportSubtree: return "support_subtree";
    case Clause::kCoverage: return "coverage";
    case Clause::kChunkAxiom: return "chunk_axiom";
    case Clause::kLabelKind: return "label_kind";
    case Clause::kMinimality: return "minimality";
    case Clause::kValenceTwo: return "valence_two";
  }
  return "unknown";
}

LabelKind shape_kind(const DefiningGraph& g, VertexSet s) {
  if (s.size() == 1) return LabelKind::kCyclic;
  if (s.size() == 2) {
    int a = s.lowest();
    int b = (s - VertexSet::single(a)).lowest();
    if (g.adjacent(a, b)) return LabelKind::kDihedral;
  }
  return LabelKind::kOther;
}

ParabolicLabel node_parabolic(const SplittingBase& base, VertexSet s) {
  if (base.chunk_index(s)) return {s, LabelKind::kChunk};
  return {s, shape_kind(base.graph(), s)};
}

GammaTree::GammaTree(std::shared_ptr<const SplittingBase> base, std::vector<VertexSet> nodes,
                     std::vector<TreeEdge> edges)
    : base_(std::move(base)), nodes_(std::move(nodes)), edges_(std::move(edges)) {
  if (!base_) throw InvalidInput("tree without a base graph");
  const VertexSet all = base_->graph().all();
  for (std::size_t v = 0; v < nodes_.size(); ++v)
    if (!nodes_[v].subset_of(all)) throw InvalidInput("node " + std::to_string(v) + " references unknown vertices");
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    const auto& te = edges_[e];
    if (te.a < 0 || te.b < 0 || te.a >= node_count() || te.b >= node_count())
      throw InvalidInput("edge " + std::to_string(e) + " references an unknown node");
    if (!te.label.subset_of(all)) throw InvalidInput("edge " + std::to_string(e) + " references unknown vertices");
  }
}

std::vector<int> GammaTree::incident_edges(int node) const {
  std::vector<int> out;
  for (int e = 0; e < edge_count(); ++e)
    if (edges_[e].touches(node)) out.push_back(e);
  return out;
}

int GammaTree::degree(int node) const {
  return static_cast<int>(std::count_if(edges_.begin(), edges_.end(), [&](const TreeEdge& e) { return e.touches(node); }));
}

bool GammaTree::collapsible(int e) const {
  const auto& te = edges_[e];
  return te.label == nodes_[te.a] || te.label == nodes_[te.b];
}

bool GammaTree::reduced() const {
  for (int e = 0; e < edge_count(); ++e)
    if (collapsible(e)) return false;
  return true;
}

namespace {

bool is_tree_shape(const GammaTree& k) {
  const int n = k.node_count();
  if (n == 0 || k.edge_count() != n - 1) return false;
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& e : k.edges()) {
    int ra = find(e.a), rb = find(e.b);
    if (ra == rb) return false;
    parent[ra] = rb;
  }
  return true;
}

// Collects violations into `out`, or stops at the first Gamma-tree failure
// when `out` is null. Returns {visual splitting ok, gamma tree ok}.
std::pair<bool, bool> check(const GammaTree& k, std::vector<Violation>* out) {
  const auto& g = k.graph();
  const auto& base = k.base();
  bool visual = true;
  bool gamma = true;
  auto fail = [&](Clause c, bool visual_clause, auto&& detail) {
    if (visual_clause) visual = false;
    gamma = false;
    if (out) out->push_back({c, detail()});
    return out == nullptr;
  };

  if (!is_tree_shape(k) && fail(Clause::kNotATree, true, [&] { return std::string("edges do not form a tree on the nodes"); }))
    return {false, false};

  for (int e = 0; e < k.edge_count(); ++e) {
    const auto& te = k.edge(e);
    if (!te.label.subset_of(k.node_label(te.a) & k.node_label(te.b)) &&
        fail(Clause::kContainment, true, [&] {
          return "edge " + std::to_string(e) + " label " + g.format(te.label) + " not contained in both endpoints";
        }))
      return {false, false};
  }

  VertexSet covered;
  for (VertexSet l : k.node_labels()) covered |= l;
  for (int s : g.all()) {
    if (!covered.contains(s)) {
      if (fail(Clause::kCoverage, true, [&] { return "generator " + g.name(s) + " lies in no node label"; }))
        return {false, false};
      continue;
    }
    // Nodes carrying s must be connected through edges carrying s.
    std::vector<int> holders;
    for (int v = 0; v < k.node_count(); ++v)
      if (k.node_label(v).contains(s)) holders.push_back(v);
    std::vector<char> reached(k.node_count(), 0);
    std::vector<int> stack{holders.front()};
    reached[holders.front()] = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (const auto& te : k.edges()) {
        if (!te.touches(v) || !te.label.contains(s)) continue;
        int w = te.other(v);
        if (!reached[w] && k.node_label(w).contains(s)) {
          reached[w] = 1;
          stack.push_back(w);
        }
      }
    }
    bool connected = std::all_of(holders.begin(), holders.end(), [&](int v) { return reached[v] != 0; });
    if (!connected && fail(Clause::kSupportSubtree, true, [&] { return "support of " + g.name(s) + " is disconnected"; }))
      return {false, false};
  }
  for (const auto& ge : g.edges()) {
    VertexSet pair = VertexSet::pair(ge.a, ge.b);
    bool inside = std::any_of(k.node_labels().begin(), k.node_labels().end(), [&](VertexSet l) { return pair.subset_of(l); });
    if (!inside && fail(Clause::kCoverage, true, [&] { return "edge " + g.format(pair) + " lies in no node label"; }))
      return {false, false};
  }

  for (std::size_t c = 0; c < base.chunks().size(); ++c) {
    VertexSet chunk = base.chunks()[c];
    auto count = std::count(k.node_labels().begin(), k.node_labels().end(), chunk);
    if (count != 1 && fail(Clause::kChunkAxiom, false, [&] {
          return "chunk " + g.format(chunk) + " labels " + std::to_string(count) + " nodes";
        }))
      return {visual, false};
  }
  for (int v = 0; v < k.node_count(); ++v) {
    auto kind = node_parabolic(base, k.node_label(v)).kind;
    if (kind == LabelKind::kOther && fail(Clause::kLabelKind, false, [&] {
          return "node " + std::to_string(v) + " label " + g.format(k.node_label(v)) + " is neither a chunk, cyclic nor dihedral";
        }))
      return {visual, false};
  }
  for (int e = 0; e < k.edge_count(); ++e) {
    auto kind = shape_kind(g, k.edge(e).label);
    if (kind == LabelKind::kOther && fail(Clause::kLabelKind, false, [&] {
          return "edge " + std::to_string(e) + " label " + g.format(k.edge(e).label) + " is neither cyclic nor dihedral";
        }))
      return {visual, false};
  }
  for (int v = 0; v < k.node_count(); ++v) {
    auto inc = k.incident_edges(v);
    const VertexSet l = k.node_label(v);
    if (inc.size() == 1 && k.edge(inc[0]).label == l &&
        fail(Clause::kMinimality, false, [&] { return "leaf " + std::to_string(v) + " has the label of its edge"; }))
      return {visual, false};
    if (inc.size() == 2 && k.edge(inc[0]).label == l && k.edge(inc[1]).label == l &&
        fail(Clause::kValenceTwo, false, [&] {
          return "node " + std::to_string(v) + " has two incident edges labeled like itself";
        }))
      return {visual, false};
  }
  return {visual, gamma};
}

void append_hex(std::string& out, VertexSet s) {
  char buf[20];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, s.bits(), 16);
  out.append(buf, ptr);
}

class TreeEncoder {
 public:
  TreeEncoder(const GammaTree& k, int marked) : k_(k), marked_(marked), adj_(k.node_count()) {
    for (int e = 0; e < k.edge_count(); ++e) {
      adj_[k.edge(e).a].push_back(e);
      adj_[k.edge(e).b].push_back(e);
    }
  }

  std::string encode() const {
    std::string best;
    for (int c : centers()) {
      std::string s = rooted(c, -1);
      if (best.empty() || s < best) best = std::move(s);
    }
    return "T" + std::to_string(k_.node_count()) + ":" + best;
  }

 private:
  std::vector<int> centers() const {
    const int n = k_.node_count();
    if (n <= 2) {
      std::vector<int> all(n);
      std::iota(all.begin(), all.end(), 0);
      return all;
    }
    std::vector<int> deg(n);
    std::vector<int> layer;
    for (int v = 0; v < n; ++v) {
      deg[v] = static_cast<int>(adj_[v].size());
      if (deg[v] <= 1) layer.push_back(v);
    }
    int remaining = n;
    while (remaining > 2) {
      remaining -= static_cast<int>(layer.size());
      std::vector<int> next;
      for (int v : layer)
        for (int e : adj_[v]) {
          int w = k_.edge(e).other(v);
          if (--deg[w] == 1) next.push_back(w);
        }
      layer = std::move(next);
    }
    std::sort(layer.begin(), layer.end());
    return layer;
  }

  std::string rooted(int v, int via) const {
    std::vector<std::string> children;
    for (int e : adj_[v]) {
      if (e == via) continue;
      std::string c = "<";
      append_hex(c, k_.edge(e).label);
      if (e == marked_) c += '*';
      c += rooted(k_.edge(e).other(v), e);
      children.push_back(std::move(c));
    }
    std::sort(children.begin(), children.end());
    std::string out = "(";
    append_hex(out, k_.node_label(v));
    for (auto& c : children) out += c;
    out += ')';
    return out;
  }

  const GammaTree& k_;
  int marked_;
  std::vector<std::vector<int>> adj_;
};

}  // namespace

SplittingVerdict validate_splitting(const GammaTree& k) {
  SplittingVerdict verdict;
  auto [visual, gamma] = check(k, &verdict.violations);
  verdict.valid_visual_splitting = visual;
  verdict.valid_gamma_tree = gamma;
  return verdict;
}

bool is_gamma_tree(const GammaTree& k) { return check(k, nullptr).second; }

CanonicalCode canonical_tree_code(const GammaTree& k, int marked) {
  if (!is_tree_shape(k)) throw InvalidInput("canonical tree code requires a tree");
  return {TreeEncoder(k, marked).encode()};
}

CanonicalCode canonical_tree_code(const GammaTree& k) { return canonical_tree_code(k, -1); }

std::vector<VertexSet> elliptic_chunk_sets(const GammaTree& k) {
  std::vector<VertexSet> out;
  for (VertexSet l : k.node_labels())
    if (k.base().chunk_index(l)) out.push_back(l);
  std::sort(out.begin(), out.end(), [&](VertexSet a, VertexSet b) { return chunk_order_less(k.graph(), a, b); });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace {

void require_splittable(const SplittingBase& base) {
  if (!base.large_type()) throw ConstraintError("graph is not large-type");
}

struct Forest {
  std::vector<int> parent;
  explicit Forest(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
};

// Pairs eligible for the next join given the joins made so far, restricted
// to the preferred class (shared edge if any, else shared vertex).
std::vector<std::pair<int, int>> eligible_joins(const std::vector<VertexSet>& chunks,
                                                const std::vector<std::pair<int, int>>& joined) {
  const int n = static_cast<int>(chunks.size());
  Forest f(n);
  for (auto [i, j] : joined) f.parent[f.find(i)] = f.find(j);
  for (int want : {2, 1}) {
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (f.find(i) != f.find(j) && (chunks[i] & chunks[j]).size() == want) out.emplace_back(i, j);
    if (!out.empty()) return out;
  }
  return {};
}

GammaTree tree_from_joins(const std::shared_ptr<const SplittingBase>& base,
                          const std::vector<std::pair<int, int>>& joined) {
  const auto& chunks = base->chunks();
  std::vector<TreeEdge> edges;
  for (auto [i, j] : joined) edges.push_back({i, j, chunks[i] & chunks[j]});
  return GammaTree(base, chunks, std::move(edges));
}

}  // namespace

GammaTree build_t_gamma(const std::shared_ptr<const SplittingBase>& base) {
  require_splittable(*base);
  std::vector<std::pair<int, int>> joined;
  while (joined.size() + 1 < base->chunks().size()) {
    auto options = eligible_joins(base->chunks(), joined);
    if (options.empty()) throw ConstraintError("chunks do not cover a connected graph");
    joined.push_back(options.front());
  }
  return tree_from_joins(base, joined);
}

std::vector<GammaTree> enumerate_t_gamma(const std::shared_ptr<const SplittingBase>& base) {
  require_splittable(*base);
  const std::size_t target = base->chunks().size() - 1;
  std::map<CanonicalCode, GammaTree> found;
  std::set<std::vector<std::pair<int, int>>> visited;
  std::vector<std::vector<std::pair<int, int>>> stack{{}};
  while (!stack.empty()) {
    auto joined = std::move(stack.back());
    stack.pop_back();
    if (joined.size() == target) {
      auto tree = tree_from_joins(base, joined);
      found.try_emplace(canonical_tree_code(tree), std::move(tree));
      continue;
    }
    for (auto pair : eligible_joins(base->chunks(), joined)) {
      auto next = joined;
      next.insert(std::lower_bound(next.begin(), next.end(), pair), pair);
      if (visited.insert(next).second) stack.push_back(std::move(next));
    }
  }
  std::vector<GammaTree> out;
  for (auto& [code, tree] : found) out.push_back(std::move(tree));
  return out;
}

std::string describe(const GammaTree& k) {
  const auto& g = k.graph();
  std::string out;
  for (int v = 0; v < k.node_count(); ++v)
    out += std::to_string(v) + " " + g.format(k.node_label(v)) + " " +
           to_string(node_parabolic(k.base(), k.node_label(v)).kind) + "\n";
  for (const auto& e : k.edges())
    out += std::to_string(e.a) + "-" + std::to_string(e.b) + " " + g.format(e.label) + "\n";
  return out;
}

}  // namespace defspace
