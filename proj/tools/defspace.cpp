#include <fstream>
#include <iostream>

#include "CLI11.hpp"

#include "defspace/chunks.hpp"
#include "defspace/errors.hpp"
#include "defspace/report.hpp"

using namespace defspace;

namespace {

struct Settings {
  std::string input;
  std::string tree_path;
  std::string dot_path;
  std::string policy = "lex";
  bool json = false;
  bool all = false;
  int max_extra = -1;
  std::size_t node_cap = 10000;
  int threads = 1;
};

void emit(const Settings& s, const Json& doc, const std::string& text) {
  if (s.json)
    std::cout << doc.dump(2) << "\n";
  else
    std::cout << text;
}

void write_dot(const Settings& s, const std::string& dot) {
  if (s.dot_path.empty()) return;
  std::ofstream out(s.dot_path);
  if (!out) throw InvalidInput("cannot write '" + s.dot_path + "'");
  out << dot;
}

EnumerationOptions enumeration_options(const Settings& s) {
  EnumerationOptions o;
  if (s.max_extra >= 0) o.max_extra = s.max_extra;
  return o;
}

std::string list_names(const DefiningGraph& g, const std::vector<VertexSet>& sets) {
  std::string out;
  for (VertexSet c : sets) out += g.format(c) + "\n";
  return out;
}

int run_validate(const Settings& s) {
  auto g = load_defining_graph(s.input);
  if (s.tree_path.empty()) {
    emit(s, {{"valid", true}, {"graph", graph_json(g)}},
         "valid: " + std::to_string(g.vertex_count()) + " vertices, " + std::to_string(g.edge_count()) + " edges\n");
    return 0;
  }
  auto base = SplittingBase::make(g);
  auto k = load_tree_json(base, s.tree_path);
  auto verdict = validate_splitting(k);
  std::string text = std::string("valid_visual_splitting: ") + (verdict.valid_visual_splitting ? "true" : "false") +
                     "\nvalid_gamma_tree: " + (verdict.valid_gamma_tree ? "true" : "false") + "\n";
  for (const auto& v : verdict.violations) text += std::string(to_string(v.clause)) + ": " + v.detail + "\n";
  emit(s, verdict_json(k, verdict), text);
  write_dot(s, tree_dot(k));
  return verdict.valid_gamma_tree ? 0 : 1;
}

int run_classify(const Settings& s) {
  auto g = load_defining_graph(s.input);
  auto f = flags_json(classify(g));
  std::string text;
  for (auto& [key, value] : f.items()) text += key + ": " + (value.get<bool>() ? "true" : "false") + "\n";
  emit(s, {{"code", canonical_graph_code(g).bytes}, {"flags", f}}, text);
  return 0;
}

int run_chunks(const Settings& s) {
  auto g = load_defining_graph(s.input);
  auto cs = chunks(g);
  emit(s, chunks_json(g, cs), list_names(g, cs));
  write_dot(s, chunks_dot(g, cs));
  return 0;
}

int run_split(const Settings& s) {
  if (s.policy != "lex") throw InvalidInput("unknown policy '" + s.policy + "'");
  auto base = SplittingBase::make(load_defining_graph(s.input));
  if (!s.all) {
    auto k = build_t_gamma(base);
    Json doc = tree_json(k);
    doc["code"] = canonical_tree_code(k).bytes;
    emit(s, doc, describe(k));
    write_dot(s, tree_dot(k));
    return 0;
  }
  auto trees = enumerate_t_gamma(base);
  Json list = Json::array();
  std::string text;
  for (std::size_t i = 0; i < trees.size(); ++i) {
    list.push_back({{"code", canonical_tree_code(trees[i]).bytes}, {"tree", tree_json(trees[i])}});
    text += "# variant " + std::to_string(i) + "\n" + describe(trees[i]);
  }
  emit(s, {{"count", trees.size()}, {"variants", list}}, text);
  if (!trees.empty()) write_dot(s, tree_dot(trees.front()));
  return 0;
}

int run_enumerate(const Settings& s) {
  auto base = SplittingBase::make(load_defining_graph(s.input));
  auto e = enumerate_gamma_trees(base, enumeration_options(s));
  std::string text = std::to_string(e.trees.size()) + " classes\n";
  for (std::size_t i = 0; i < e.trees.size(); ++i)
    text += "# class " + std::to_string(i) + (e.trees[i].reduced() ? " reduced" : "") + "\n" + describe(e.trees[i]);
  emit(s, enumeration_json(e), text);
  return 0;
}

int run_spine(const Settings& s) {
  auto r = spine(load_defining_graph(s.input), enumeration_options(s));
  std::string text = "gamma_trees: " + std::to_string(r.enumeration.trees.size()) +
                     "\nreduced: " + std::to_string(r.reduced.size()) +
                     "\nsurviving: " + std::to_string(r.surviving.size()) +
                     "\ndimension: " + std::to_string(r.dimension) +
                     "\nslide_graph_connected: " + (r.slide_graph_connected ? "true" : "false") + "\n";
  emit(s, spine_json(r), text);
  write_dot(s, spine_dot(r));
  return 0;
}

int run_orbit(const Settings& s) {
  auto g = load_defining_graph(s.input);
  auto f = classify(g);
  if (!f.connected) throw ConstraintError("defining graph is disconnected");
  if (!f.large_type) throw ConstraintError("defining graph is not large-type");
  auto o = twist_orbit(g, s.node_cap);
  std::string text = "size: " + std::to_string(o.representatives.size()) + (o.truncated ? " (truncated)" : "") + "\n";
  for (std::size_t i = 0; i < o.representatives.size(); ++i)
    text += "# member " + std::to_string(i) + "\n" + to_adg(o.representatives[i]);
  emit(s, orbit_json(o), text);
  write_dot(s, orbit_dot(o));
  if (o.truncated) std::cerr << "defspace: orbit truncated at " << s.node_cap << " members\n";
  return o.truncated ? 2 : 0;
}

int run_stabilizer(const Settings& s) {
  auto base = SplittingBase::make(load_defining_graph(s.input));
  std::vector<GammaTree> trees;
  if (!s.tree_path.empty())
    trees.push_back(load_tree_json(base, s.tree_path));
  else if (s.all)
    trees = enumerate_reduced_gamma_trees(base).trees;
  else
    trees.push_back(build_t_gamma(base));
  Json list = Json::array();
  std::string text;
  for (const auto& k : trees) {
    auto p = stabilizer_presentation(k);
    list.push_back(stabilizer_json(k, p));
    text += "tree " + canonical_tree_code(k).bytes + "\nexact: " + (p.exact ? "true" : "false") + "\n";
    if (p.free_abelian_rank) text += "free_abelian_rank: " + std::to_string(*p.free_abelian_rank) + "\n";
    text += "generators:";
    for (int i : p.generators) text += " " + p.ambient[i].name;
    text += "\n";
  }
  emit(s, {{"presentations", list}}, text);
  return 0;
}

int run_report_command(const Settings& s) {
  ReportOptions o;
  o.enumeration = enumeration_options(s);
  o.node_cap = s.node_cap;
  o.threads = s.threads;
  auto g = load_defining_graph(s.input);
  auto doc = run_report(g, o);
  std::string text = "chunks: " + std::to_string(doc["chunks"].size()) +
                     "\ngamma_trees: " + std::to_string(doc["spine"]["gamma_trees"].get<int>()) +
                     "\nreduced: " + std::to_string(doc["spine"]["reduced"].get<int>()) +
                     "\ndimension: " + std::to_string(doc["spine"]["dimension"].get<int>()) +
                     "\nslide_graph_connected: " + (doc["spine"]["slide_graph_connected"].get<bool>() ? "true" : "false") +
                     "\ntwist_orbit: " + std::to_string(doc["twist_orbit"]["size"].get<int>()) +
                     "\norbit_census: " + std::to_string(doc["orbit_census"].get<int>()) + "\n";
  emit(s, doc, text);
  if (!s.dot_path.empty()) write_dot(s, chunks_dot(g, chunks(g)));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Chunks, visual splittings, spines and twists of large-type Artin defining graphs"};
  app.require_subcommand(1);
  Settings s;
  int (*handler)(const Settings&) = nullptr;

  auto add = [&](const char* name, const char* help, int (*fn)(const Settings&)) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("input", s.input, ".adg file")->required();
    sub->add_flag("--json", s.json, "JSON on standard output");
    sub->add_option("--threads", s.threads, "worker threads")->check(CLI::PositiveNumber);
    sub->callback([&handler, fn] { handler = fn; });
    return sub;
  };
  auto* validate = add("validate", "check a graph, or a tree against it", run_validate);
  validate->add_option("--tree", s.tree_path, "tree JSON");
  validate->add_option("--dot", s.dot_path, "DOT output for the tree");
  add("classify", "class flags", run_classify);
  add("chunks", "chunk decomposition", run_chunks)->add_option("--dot", s.dot_path, "chunk colouring DOT");
  auto* split = add("split", "the canonical splitting", run_split);
  split->add_option("--policy", s.policy, "tie-break policy")->check(CLI::IsMember({"lex"}));
  split->add_flag("--all", s.all, "all outcomes of the joining process");
  split->add_option("--dot", s.dot_path, "tree DOT");
  add("enumerate", "all Gamma-tree classes", run_enumerate)->add_option("--max-extra", s.max_extra, "extra node bound");
  auto* sp = add("spine", "reduced and surviving classes, slide graph, collapse poset", run_spine);
  sp->add_option("--max-extra", s.max_extra, "extra node bound");
  sp->add_option("--dot", s.dot_path, "spine DOT");
  auto* orbit = add("twist-orbit", "defining graphs reached by twist moves", run_orbit);
  orbit->add_option("--node-cap", s.node_cap, "orbit size cap");
  orbit->add_option("--dot", s.dot_path, "orbit graph DOT");
  auto* stab = add("stabilizer", "twist group presentation of a reduced tree", run_stabilizer);
  stab->add_option("--tree", s.tree_path, "tree JSON (default: the canonical splitting)");
  stab->add_flag("--all", s.all, "every reduced class");
  auto* report = add("report", "full report", run_report_command);
  report->add_option("--max-extra", s.max_extra, "extra node bound");
  report->add_option("--node-cap", s.node_cap, "orbit size cap");
  report->add_option("--dot", s.dot_path, "chunk colouring DOT");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }
  try {
    return handler(s);
  } catch (const ParseError& e) {
    std::cerr << "defspace: parse error: " << e.what() << "\n";
    return 1;
  } catch (const InvalidInput& e) {
    std::cerr << "defspace: invalid input: " << e.what() << "\n";
    return 1;
  } catch (const InvalidMove& e) {
    std::cerr << "defspace: invalid move: " << e.what() << "\n";
    return 1;
  } catch (const ConstraintError& e) {
    std::cerr << "defspace: " << e.what() << "\n";
    return 2;
  } catch (const LimitExceeded& e) {
    std::cerr << "defspace: limit exceeded: " << e.what() << "\n";
    return 2;
  }
}
