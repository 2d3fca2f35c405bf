#include "defspace/defining_graph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "defspace/errors.hpp"

namespace defspace {

bool valid_identifier(std::string_view id) {
  if (id.empty()) return false;
  return std::all_of(id.begin(), id.end(), [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_';
  });
}

DefiningGraph DefiningGraph::build(std::vector<std::string> vertices, const std::vector<NamedEdge>& edges) {
  for (const auto& e : edges) {
    vertices.push_back(e.u);
    vertices.push_back(e.v);
  }
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  if (vertices.empty()) throw InvalidInput("empty graph");
  if (static_cast<int>(vertices.size()) > VertexSet::kCapacity)
    throw InvalidInput("more than " + std::to_string(VertexSet::kCapacity) + " vertices");
  for (const auto& v : vertices)
    if (!valid_identifier(v)) throw InvalidInput("invalid vertex identifier '" + v + "'");

  DefiningGraph g;
  g.names_ = std::move(vertices);
  const int n = g.vertex_count();
  g.labels_.assign(static_cast<std::size_t>(n) * n, 0);
  g.adjacency_.assign(n, VertexSet{});
  for (const auto& e : edges) {
    if (e.u == e.v) throw InvalidInput("loop edge at '" + e.u + "'");
    if (e.label < 2) throw InvalidInput("label " + std::to_string(e.label) + " < 2 on edge " + e.u + " " + e.v);
    int a = g.index(e.u);
    int b = g.index(e.v);
    if (a > b) std::swap(a, b);
    if (g.labels_[a * n + b] != 0) throw InvalidInput("duplicate edge " + e.u + " " + e.v);
    g.labels_[a * n + b] = g.labels_[b * n + a] = e.label;
    g.adjacency_[a].insert(b);
    g.adjacency_[b].insert(a);
    g.edges_.push_back({a, b, e.label});
  }
  std::sort(g.edges_.begin(), g.edges_.end(),
            [](const LabeledEdge& x, const LabeledEdge& y) { return std::pair(x.a, x.b) < std::pair(y.a, y.b); });
  return g;
}

std::optional<int> DefiningGraph::find(std::string_view name) const {
  auto it = std::lower_bound(names_.begin(), names_.end(), name);
  if (it == names_.end() || *it != name) return std::nullopt;
  return static_cast<int>(it - names_.begin());
}

int DefiningGraph::index(std::string_view name) const {
  if (auto i = find(name)) return *i;
  throw UnknownVertex(std::string(name));
}

std::vector<std::string> DefiningGraph::names_of(VertexSet s) const {
  std::vector<std::string> out;
  for (int v : s) out.push_back(names_[v]);
  return out;
}

VertexSet DefiningGraph::set_of(const std::vector<std::string>& names) const {
  VertexSet s;
  for (const auto& n : names) s.insert(index(n));
  return s;
}

std::string DefiningGraph::format(VertexSet s) const {
  std::string out = "{";
  bool first = true;
  for (int v : s) {
    if (!first) out += ',';
    out += names_[v];
    first = false;
  }
  return out + "}";
}

DefiningGraph DefiningGraph::induced(VertexSet s) const {
  std::vector<NamedEdge> es;
  for (const auto& e : edges_)
    if (s.contains(e.a) && s.contains(e.b)) es.push_back({names_[e.a], names_[e.b], e.label});
  return build(names_of(s), es);
}

std::vector<NamedEdge> DefiningGraph::named_edges() const {
  std::vector<NamedEdge> out;
  for (const auto& e : edges_) out.push_back({names_[e.a], names_[e.b], e.label});
  return out;
}

namespace {

std::vector<std::string_view> split_tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

}  // namespace

DefiningGraph parse_defining_graph(std::string_view text) {
  std::vector<std::string> vertices;
  std::set<std::string> declared;
  std::set<std::pair<std::string, std::string>> seen_edges;
  std::vector<NamedEdge> edges;

  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    auto tok = split_tokens(line);
    if (tok.empty()) continue;

    auto check_id = [&](std::string_view id) {
      if (!valid_identifier(id)) throw ParseError(line_no, "invalid vertex identifier '" + std::string(id) + "'");
      return std::string(id);
    };

    if (tok[0] == "vertex") {
      if (tok.size() != 2) throw ParseError(line_no, "expected 'vertex <id>'");
      auto id = check_id(tok[1]);
      if (!declared.insert(id).second) throw ParseError(line_no, "duplicate vertex declaration '" + id + "'");
      vertices.push_back(id);
    } else if (tok[0] == "edge") {
      if (tok.size() != 4) throw ParseError(line_no, "expected 'edge <u> <v> <m>'");
      auto u = check_id(tok[1]);
      auto v = check_id(tok[2]);
      int m = 0;
      auto [ptr, ec] = std::from_chars(tok[3].data(), tok[3].data() + tok[3].size(), m);
      if (ec != std::errc{} || ptr != tok[3].data() + tok[3].size())
        throw ParseError(line_no, "label '" + std::string(tok[3]) + "' is not an integer");
      if (u == v) throw ParseError(line_no, "loop edge at '" + u + "'");
      if (m < 2) throw ParseError(line_no, "label " + std::to_string(m) + " < 2");
      auto key = u < v ? std::pair(u, v) : std::pair(v, u);
      if (!seen_edges.insert(key).second) throw ParseError(line_no, "duplicate edge " + u + " " + v);
      declared.insert(u);
      declared.insert(v);
      edges.push_back({u, v, m});
    } else {
      throw ParseError(line_no, "unknown directive '" + std::string(tok[0]) + "'");
    }
  }
  if (declared.empty()) throw ParseError(0, "empty graph");
  try {
    return DefiningGraph::build(std::move(vertices), edges);
  } catch (const InvalidInput& e) {
    throw ParseError(0, e.what());
  }
}

DefiningGraph load_defining_graph(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(0, "cannot read '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_defining_graph(ss.str());
}

std::string to_adg(const DefiningGraph& g) {
  std::string out;
  VertexSet touched;
  for (const auto& e : g.edges()) touched |= VertexSet::pair(e.a, e.b);
  for (int v : g.all() - touched) out += "vertex " + g.name(v) + "\n";
  for (const auto& e : g.edges())
    out += "edge " + g.name(e.a) + " " + g.name(e.b) + " " + std::to_string(e.label) + "\n";
  return out;
}

namespace {

VertexSet reach(const DefiningGraph& g, int source, VertexSet within, bool odd_only) {
  VertexSet seen = VertexSet::single(source);
  VertexSet frontier = seen;
  while (!frontier.empty()) {
    VertexSet next;
    for (int v : frontier) {
      VertexSet nb = g.neighbors(v) & within;
      if (odd_only) {
        VertexSet odd;
        for (int w : nb)
          if (g.label(v, w) % 2 == 1) odd.insert(w);
        nb = odd;
      }
      next |= nb;
    }
    frontier = next - seen;
    seen |= next;
  }
  return seen;
}

}  // namespace

bool is_connected(const DefiningGraph& g, VertexSet within) {
  if (within.empty()) return true;
  return reach(g, within.lowest(), within, false) == within;
}

std::vector<VertexSet> components(const DefiningGraph& g, VertexSet within) {
  std::vector<VertexSet> out;
  VertexSet rest = within;
  while (!rest.empty()) {
    VertexSet c = reach(g, rest.lowest(), rest, false);
    out.push_back(c);
    rest = rest - c;
  }
  return out;
}

ClassFlags classify(const DefiningGraph& g) {
  ClassFlags f;
  f.connected = is_connected(g, g.all());
  f.large_type = std::all_of(g.edges().begin(), g.edges().end(), [](const auto& e) { return e.label >= 3; });
  f.xxxl = std::all_of(g.edges().begin(), g.edges().end(), [](const auto& e) { return e.label >= 6; });
  f.triangle_free = true;
  for (const auto& e : g.edges())
    if (g.neighbors(e.a).intersects(g.neighbors(e.b))) f.triangle_free = false;
  f.spherical = g.vertex_count() == 1 || (g.vertex_count() == 2 && g.edge_count() == 1);
  f.even_dihedral = g.vertex_count() == 2 && g.edge_count() == 1 && g.edges()[0].label % 2 == 0;
  f.rigid_chunks_proven = f.triangle_free || f.xxxl;
  return f;
}

VertexSet odd_reachable(const DefiningGraph& g, int source, VertexSet within) {
  return reach(g, source, within, true);
}

VertexSet odd_reachable(const DefiningGraph& g, std::string_view source) {
  return odd_reachable(g, g.index(source), g.all());
}

std::vector<int> odd_path(const DefiningGraph& g, int from, int to, VertexSet within) {
  if (!within.contains(from) || !within.contains(to)) return {};
  // BFS with neighbours in index order; parents fixed at first discovery.
  std::vector<int> parent(g.vertex_count(), -1);
  VertexSet seen = VertexSet::single(from);
  std::vector<int> queue{from};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    int v = queue[head];
    if (v == to) break;
    for (int w : g.neighbors(v) & within) {
      if (seen.contains(w) || g.label(v, w) % 2 == 0) continue;
      seen.insert(w);
      parent[w] = v;
      queue.push_back(w);
    }
  }
  if (!seen.contains(to)) return {};
  std::vector<int> path;
  for (int v = to; v != -1; v = parent[v]) path.push_back(v);
  std::reverse(path.begin(), path.end());
  return path;
}

}  // namespace defspace
