#pragma once

#include <string>

#include "defspace/defining_graph.hpp"

inline defspace::DefiningGraph fixture(const std::string& name) {
  return defspace::load_defining_graph(std::string(DEFSPACE_FIXTURES) + "/" + name + ".adg");
}

inline std::string fixture_path(const std::string& name) { return std::string(DEFSPACE_FIXTURES) + "/" + name + ".adg"; }
