#pragma once

#include <string>

#include "json.hpp"

#include "defspace/gamma_tree.hpp"
#include "defspace/spine.hpp"
#include "defspace/twists.hpp"

namespace defspace {

using Json = nlohmann::ordered_json;

Json graph_json(const DefiningGraph& g);
Json flags_json(const ClassFlags& f);
Json chunks_json(const DefiningGraph& g, const std::vector<VertexSet>& chunks);
Json tree_json(const GammaTree& k);
Json verdict_json(const GammaTree& k, const SplittingVerdict& v);
Json enumeration_json(const Enumeration& e);
Json spine_json(const SpineReport& r);
Json orbit_json(const TwistOrbit& o);
Json stabilizer_json(const GammaTree& k, const RaagPresentation& p);
Json dihedral_json(const DihedralOut& d);

/// Reads the tree JSON layout back. Node ids must be 0..n-1 in some order;
/// kinds are ignored. Throws InvalidInput on malformed documents or unknown vertices.
GammaTree parse_tree_json(const std::shared_ptr<const SplittingBase>& base, const Json& doc);
GammaTree load_tree_json(const std::shared_ptr<const SplittingBase>& base, const std::string& path);

std::string chunks_dot(const DefiningGraph& g, const std::vector<VertexSet>& chunks);
std::string tree_dot(const GammaTree& k);
std::string spine_dot(const SpineReport& r);
std::string orbit_dot(const TwistOrbit& o);

struct ReportOptions {
  EnumerationOptions enumeration;
  std::size_t node_cap = 10000;
  int threads = 1;
};

/// Everything computable for one connected large-type graph. The orbit census
/// sums the Gamma-tree class counts over the members of the twist orbit.
/// Throws ConstraintError for disconnected or non-large-type graphs.
Json run_report(const DefiningGraph& g, const ReportOptions& options = {});

}  // namespace defspace
