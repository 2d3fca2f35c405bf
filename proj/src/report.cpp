#include "defspace/report.hpp"

#include <fstream>
#include <future>
#include <sstream>

#include "defspace/chunks.hpp"
#include "defspace/errors.hpp"

namespace defspace {
namespace {

Json names(const DefiningGraph& g, VertexSet s) { return Json(g.names_of(s)); }

Json path_names(const DefiningGraph& g, const std::vector<int>& path) {
  Json out = Json::array();
  for (int v : path) out.push_back(g.name(v));
  return out;
}

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

const char* const kPalette[] = {"red", "blue", "gold", "green", "orange", "cyan", "magenta", "brown", "gray", "pink"};

}  // namespace

Json graph_json(const DefiningGraph& g) {
  Json edges = Json::array();
  for (const auto& e : g.edges()) edges.push_back({{"u", g.name(e.a)}, {"v", g.name(e.b)}, {"m", e.label}});
  return {{"vertices", g.names()}, {"edges", edges}};
}

Json flags_json(const ClassFlags& f) {
  return {{"connected", f.connected},         {"large_type", f.large_type},
          {"xxxl", f.xxxl},                   {"triangle_free", f.triangle_free},
          {"spherical", f.spherical},         {"even_dihedral", f.even_dihedral},
          {"rigid_chunks_proven", f.rigid_chunks_proven}};
}

Json chunks_json(const DefiningGraph& g, const std::vector<VertexSet>& chunks) {
  Json list = Json::array();
  for (VertexSet c : chunks) list.push_back(names(g, c));
  return {{"chunks", list}};
}

Json tree_json(const GammaTree& k) {
  const auto& g = k.graph();
  Json nodes = Json::array();
  for (int v = 0; v < k.node_count(); ++v)
    nodes.push_back({{"id", v},
                     {"label", names(g, k.node_label(v))},
                     {"kind", to_string(node_parabolic(k.base(), k.node_label(v)).kind)}});
  Json edges = Json::array();
  for (const auto& e : k.edges()) edges.push_back({{"a", e.a}, {"b", e.b}, {"label", names(g, e.label)}});
  return {{"nodes", nodes}, {"edges", edges}};
}

Json verdict_json(const GammaTree& k, const SplittingVerdict& v) {
  Json violations = Json::array();
  for (const auto& x : v.violations) violations.push_back({{"clause", to_string(x.clause)}, {"detail", x.detail}});
  Json out = {{"valid_visual_splitting", v.valid_visual_splitting},
              {"valid_gamma_tree", v.valid_gamma_tree},
              {"violations", violations}};
  if (v.valid_visual_splitting) {
    out["reduced"] = k.reduced();
    out["code"] = canonical_tree_code(k).bytes;
  }
  return out;
}

Json enumeration_json(const Enumeration& e) {
  Json classes = Json::array();
  for (std::size_t i = 0; i < e.trees.size(); ++i)
    classes.push_back({{"code", e.codes[i].bytes}, {"reduced", e.trees[i].reduced()}, {"tree", tree_json(e.trees[i])}});
  return {{"max_extra", e.max_extra}, {"node_cap", e.node_cap}, {"count", e.trees.size()}, {"classes", classes}};
}

Json spine_json(const SpineReport& r) {
  const auto& e = r.enumeration;
  Json classes = Json::array();
  for (std::size_t i = 0; i < e.trees.size(); ++i)
    classes.push_back({{"index", i},
                       {"code", e.codes[i].bytes},
                       {"nodes", e.trees[i].node_count()},
                       {"reduced", r.status[i].reduced},
                       {"surviving", r.status[i].surviving},
                       {"surviving_edges", r.status[i].surviving_edges},
                       {"tree", tree_json(e.trees[i])}});
  Json slide = Json::array();
  for (int i : r.reduced) slide.push_back({{"index", i}, {"adjacent", r.slide_graph[i]}});
  Json poset = Json::array();
  for (auto [a, b] : r.collapse_poset) poset.push_back({{"from", a}, {"to", b}});
  return {{"graph_code", r.graph_code.bytes},
          {"max_extra", e.max_extra},
          {"node_cap", e.node_cap},
          {"counts",
           {{"gamma_trees", e.trees.size()}, {"reduced", r.reduced.size()}, {"surviving", r.surviving.size()}}},
          {"dimension", r.dimension},
          {"slide_graph_connected", r.slide_graph_connected},
          {"reduced", r.reduced},
          {"surviving", r.surviving},
          {"slide_graph", slide},
          {"collapse_poset", poset},
          {"classes", classes}};
}

Json orbit_json(const TwistOrbit& o) {
  Json reps = Json::array();
  for (std::size_t i = 0; i < o.representatives.size(); ++i)
    reps.push_back({{"index", i}, {"code", o.codes[i].bytes}, {"adg", to_adg(o.representatives[i])}});
  Json moves = Json::array();
  for (const auto& e : o.edges) {
    const auto& g = o.representatives[e.from];
    moves.push_back({{"from", e.from},
                     {"to", e.to},
                     {"s", g.name(e.move.source)},
                     {"t", g.name(e.move.target)},
                     {"odd_path", path_names(g, e.move.odd_path)},
                     {"branch", names(g, e.move.branch)}});
  }
  return {{"size", o.representatives.size()}, {"truncated", o.truncated}, {"representatives", reps}, {"moves", moves}};
}

Json stabilizer_json(const GammaTree& k, const RaagPresentation& p) {
  const auto& g = k.graph();
  Json ambient = Json::array();
  for (const auto& a : p.ambient)
    ambient.push_back({{"name", a.name},
                       {"edge", a.edge},
                       {"origin", a.origin},
                       {"factor", to_string(a.kind)},
                       {"element", names(g, a.element)},
                       {"power", a.power}});
  Json ids = Json::array();
  for (const auto& x : p.identifications) {
    Json item = {{"kind", x.kind}, {"generators", x.generators}, {"eliminated", x.eliminated}};
    if (x.node >= 0) item["node"] = x.node;
    if (x.edge >= 0) item["edge"] = x.edge;
    ids.push_back(item);
  }
  Json gens = Json::array();
  for (int i : p.generators) gens.push_back(p.ambient[i].name);
  Json comm = Json::array();
  for (auto [a, b] : p.commutation) comm.push_back({p.ambient[a].name, p.ambient[b].name});
  return {{"code", canonical_tree_code(k).bytes},
          {"exact", p.exact},
          {"free_abelian_rank", p.free_abelian_rank ? Json(*p.free_abelian_rank) : Json(nullptr)},
          {"generators", gens},
          {"commutation", comm},
          {"ambient", ambient},
          {"identifications", ids}};
}

Json dihedral_json(const DihedralOut& d) {
  Json gens = Json::array();
  for (const auto& a : d.generators) gens.push_back({{"name", a.name}, {"action", a.action}, {"role", a.role}});
  Json out = {{"m", d.m}, {"even", d.even}, {"group", d.group}, {"generators", gens}};
  if (d.even) out["presentation"] = d.presentation;
  return out;
}

GammaTree parse_tree_json(const std::shared_ptr<const SplittingBase>& base, const Json& doc) {
  const auto& g = base->graph();
  try {
    if (!doc.is_object() || !doc.contains("nodes") || !doc.contains("edges"))
      throw InvalidInput("tree document needs 'nodes' and 'edges'");
    const auto& jn = doc.at("nodes");
    std::vector<VertexSet> nodes(jn.size());
    std::vector<char> seen(jn.size(), 0);
    for (const auto& n : jn) {
      const int id = n.at("id").get<int>();
      if (id < 0 || id >= static_cast<int>(jn.size()) || seen[id])
        throw InvalidInput("node ids must be distinct and in 0.." + std::to_string(jn.size() - 1));
      seen[id] = 1;
      nodes[id] = g.set_of(n.at("label").get<std::vector<std::string>>());
    }
    std::vector<TreeEdge> edges;
    for (const auto& e : doc.at("edges"))
      edges.push_back({e.at("a").get<int>(), e.at("b").get<int>(), g.set_of(e.at("label").get<std::vector<std::string>>())});
    return GammaTree(base, std::move(nodes), std::move(edges));
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("malformed tree document: ") + e.what());
  }
}

GammaTree load_tree_json(const std::shared_ptr<const SplittingBase>& base, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot read '" + path + "'");
  Json doc;
  try {
    doc = Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput("'" + path + "' is not JSON: " + e.what());
  }
  return parse_tree_json(base, doc);
}

std::string chunks_dot(const DefiningGraph& g, const std::vector<VertexSet>& chunks) {
  std::ostringstream out;
  out << "graph chunks {\n  node [shape=circle];\n";
  for (int v = 0; v < g.vertex_count(); ++v) out << "  " << quoted(g.name(v)) << ";\n";
  for (const auto& e : g.edges()) {
    std::vector<int> owners;
    for (std::size_t i = 0; i < chunks.size(); ++i)
      if (chunks[i].contains(e.a) && chunks[i].contains(e.b)) owners.push_back(static_cast<int>(i));
    const char* colour = owners.size() == 1 ? kPalette[owners[0] % std::size(kPalette)] : "purple";
    out << "  " << quoted(g.name(e.a)) << " -- " << quoted(g.name(e.b)) << " [label=" << e.label
        << ", color=" << colour << "];\n";
  }
  out << "}\n";
  return out.str();
}

std::string tree_dot(const GammaTree& k) {
  const auto& g = k.graph();
  std::ostringstream out;
  out << "graph gamma_tree {\n";
  for (int v = 0; v < k.node_count(); ++v) {
    auto chunk = k.base().chunk_index(k.node_label(v));
    out << "  n" << v << " [label=" << quoted(g.format(k.node_label(v)));
    if (chunk) out << ", style=filled, fillcolor=" << kPalette[*chunk % std::size(kPalette)];
    out << "];\n";
  }
  for (const auto& e : k.edges()) out << "  n" << e.a << " -- n" << e.b << " [label=" << quoted(g.format(e.label)) << "];\n";
  out << "}\n";
  return out.str();
}

std::string spine_dot(const SpineReport& r) {
  std::ostringstream out;
  out << "digraph spine {\n";
  for (int i : r.surviving)
    out << "  c" << i << " [label=\"" << i << " (" << r.enumeration.trees[i].node_count() << ")\""
        << (r.status[i].reduced ? ", shape=box" : "") << "];\n";
  for (int i : r.reduced)
    for (int j : r.slide_graph[i])
      if (i < j) out << "  c" << i << " -> c" << j << " [dir=none, color=blue];\n";
  for (auto [a, b] : r.collapse_poset) out << "  c" << a << " -> c" << b << " [color=black];\n";
  out << "}\n";
  return out.str();
}

std::string orbit_dot(const TwistOrbit& o) {
  std::ostringstream out;
  out << "digraph twist_orbit {\n";
  for (std::size_t i = 0; i < o.representatives.size(); ++i) out << "  g" << i << " [label=\"" << i << "\"];\n";
  for (const auto& e : o.edges) {
    const auto& g = o.representatives[e.from];
    out << "  g" << e.from << " -> g" << e.to << " [label="
        << quoted(g.name(e.move.source) + ">" + g.name(e.move.target)) << "];\n";
  }
  out << "}\n";
  return out.str();
}

Json run_report(const DefiningGraph& g, const ReportOptions& options) {
  const auto flags = classify(g);
  if (!flags.connected) throw ConstraintError("defining graph is disconnected");
  if (!flags.large_type) throw ConstraintError("defining graph is not large-type");
  auto base = SplittingBase::make(g);
  auto sp = spine(base, options.enumeration);
  auto orbit = twist_orbit(g, options.node_cap);

  // Census over orbit members: each member is independent, results are
  // collected in orbit order.
  const int threads = std::max(1, options.threads);
  std::vector<std::size_t> counts(orbit.representatives.size());
  for (std::size_t start = 0; start < counts.size(); start += threads) {
    std::vector<std::future<std::size_t>> jobs;
    for (std::size_t i = start; i < std::min(counts.size(), start + threads); ++i)
      jobs.push_back(std::async(threads > 1 ? std::launch::async : std::launch::deferred, [&, i] {
        return enumerate_gamma_trees(SplittingBase::make(orbit.representatives[i]), options.enumeration).trees.size();
      }));
    for (std::size_t j = 0; j < jobs.size(); ++j) counts[start + j] = jobs[j].get();
  }
  std::size_t census = 0;
  for (auto c : counts) census += c;

  Json stabilizers = Json::array();
  for (int i : sp.reduced) {
    const auto& k = sp.enumeration.trees[i];
    stabilizers.push_back(stabilizer_json(k, stabilizer_presentation(k)));
  }
  Json reps = Json::array();
  for (std::size_t i = 0; i < orbit.representatives.size(); ++i)
    reps.push_back({{"code", orbit.codes[i].bytes}, {"adg", to_adg(orbit.representatives[i])}, {"gamma_trees", counts[i]}});

  return {{"input_code", canonical_graph_code(g).bytes},
          {"flags", flags_json(flags)},
          {"chunks", chunks_json(g, base->chunks())["chunks"]},
          {"t_gamma", tree_json(build_t_gamma(base))},
          {"spine",
           {{"gamma_trees", sp.enumeration.trees.size()},
            {"reduced", sp.reduced.size()},
            {"surviving", sp.surviving.size()},
            {"dimension", sp.dimension},
            {"slide_graph_connected", sp.slide_graph_connected}}},
          {"twist_orbit", {{"size", orbit.representatives.size()}, {"truncated", orbit.truncated}, {"representatives", reps}}},
          {"stabilizers", stabilizers},
          {"orbit_census", census}};
}

}  // namespace defspace
