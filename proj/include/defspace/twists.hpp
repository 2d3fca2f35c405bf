#pragma once

#include <optional>
#include <string>
#include <vector>

#include "defspace/gamma_tree.hpp"

namespace defspace {

/// Re-attaches the branch B (a component of the graph minus s) from s to t.
/// t lies outside B and is joined to s by an odd-labeled path avoiding B.
struct TwistMove {
  int source = 0;
  int target = 0;
  VertexSet branch;
  std::vector<int> odd_path;  ///< source first, target last
};

/// All twist moves of `g`, ordered by (source, branch lowest vertex, target).
std::vector<TwistMove> twist_moves(const DefiningGraph& g);

/// Every edge {x,s} with x in B becomes {x,t} with the same label.
/// Throws InvalidMove when `m` is not a twist move of `g`.
DefiningGraph apply_twist(const DefiningGraph& g, const TwistMove& m);

struct OrbitEdge {
  int from = 0;
  int to = 0;
  TwistMove move;  ///< expressed in the vertex names of representative `from`
};

struct TwistOrbit {
  std::vector<DefiningGraph> representatives;  ///< discovery order, the input first
  std::vector<CanonicalCode> codes;            ///< parallel to representatives
  std::vector<OrbitEdge> edges;                ///< first move found per ordered pair
  bool truncated = false;
};

/// Breadth-first closure under twist moves, stopping at `node_cap` classes.
TwistOrbit twist_orbit(const DefiningGraph& g, std::size_t node_cap = 10000);

/// Central Garside power of the dihedral parabolic on an edge.
struct GarsideCentral {
  VertexSet pair;
  int m = 0;
  int power = 0;  ///< 1 when m is even, 2 when m is odd
};

/// Throws InvalidInput when {s,t} is not an edge of `g`.
GarsideCentral garside_central(const DefiningGraph& g, int s, int t);

struct DihedralAutomorphism {
  std::string name;
  std::string action;
  std::string role;
};

struct DihedralOut {
  int m = 0;
  bool even = false;
  std::string group;  ///< "C2" or "C2 x D_inf"
  std::vector<DihedralAutomorphism> generators;
  std::string presentation;  ///< even case only
};

/// Out of the dihedral Artin group with label m. Throws InvalidInput for m < 3.
DihedralOut out_dihedral(int m);

enum class FactorKind { kEdgeCyclic, kVertexCentral, kSymbolicFree };

const char* to_string(FactorKind k);

struct RaagGenerator {
  std::string name;
  int edge = 0;
  int origin = 0;  ///< origin node of the oriented edge
  FactorKind kind = FactorKind::kEdgeCyclic;
  VertexSet element;  ///< a vertex s, or the pair of a Garside element
  int power = 1;
};

struct Identification {
  std::string kind;  ///< "vertex-centre" or "edge-diagonal"
  int node = -1;     ///< vertex-centre only
  int edge = -1;     ///< edge-diagonal only
  std::vector<int> generators;  ///< indices into ambient
  int eliminated = -1;
};

struct RaagPresentation {
  std::vector<RaagGenerator> ambient;  ///< one factor generator per coordinate
  std::vector<Identification> identifications;
  std::vector<int> generators;  ///< surviving ambient indices
  std::vector<std::pair<int, int>> commutation;
  bool exact = true;
  std::optional<int> free_abelian_rank;
};

/// Throws InvalidInput when `k` is not a valid Gamma-tree and
/// ConstraintError when it is not reduced.
RaagPresentation stabilizer_presentation(const GammaTree& k);

}  // namespace defspace
