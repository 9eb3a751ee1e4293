#pragma once

#include <array>
#include <optional>
#include <string>
#include <variant>

#include "prismatic/graph.hpp"
#include "prismatic/structures.hpp"

namespace prismatic {

// Quadruple scan: for every triangle {b1,b2,b3} and outside vertex a with at
// most one neighbour among them, route three constrained shortest paths
// a→b_i and test whether their union induces a pyramid or a prism.  First
// hit in lexicographic quadruple order wins.  Absent iff the graph contains
// neither structure.
std::optional<StructureWitness> detect_pyramid_or_prism_v1(const Graph& g);

// Decision-only detector with per-triangle set bookkeeping; much cheaper
// than v1 on dense inputs.  `stage` tells which test fired:
//   "step1"    — some X_i vertex attaches to both other X_j's directly;
//   "step3"    — a component of the far set X carries all three labels;
//   "fallback" — an apex adjacent to exactly one triangle vertex routed
//                three constrained paths whose union induces a structure
//                (covers pyramids with a length-1 arm that the set tests
//                provably miss).
// The decision always equals v1's.  The witness is produced on request by
// delegating to v1.
struct V2Result {
  bool found = false;
  std::string stage;
  std::optional<Triangle> triangle;  // the triangle at which the test fired
  std::optional<StructureWitness> witness;
};

V2Result detect_pyramid_or_prism_v2(const Graph& g, bool want_witness = false);

// --- three exits -----------------------------------------------------------
// For a connected graph and three non-empty vertex sets, produces one of
// three outcome shapes connecting the sets.

// Chordless path with one end in the first role set, the other end in the
// last, meeting the middle role set, interior clean of both end sets.
// roles[k] names the set (0,1,2) playing position k.
struct ThreeExitsPath {
  Path f;
  std::array<int, 3> roles;
};

// Center f with three paths to v_i in V_i, pairwise sharing only f and
// mutually non-adjacent elsewhere; legs have length >= 1.
struct ThreeExitsTripod {
  VertexId center;
  std::array<Path, 3> legs;  // leg i runs center → some vertex of V_i
};

// Triangle w1w2w3 with leg i from w_i into V_i (length >= 0); the triangle
// edges are the only edges between the legs.
struct ThreeExitsTriangleTripod {
  std::array<VertexId, 3> centers;
  std::array<Path, 3> legs;  // leg i runs centers[i] → some vertex of V_i
};

using ThreeExitsOutcome =
    std::variant<ThreeExitsPath, ThreeExitsTripod, ThreeExitsTriangleTripod>;

ThreeExitsOutcome three_exits(const Graph& h, const VertexSet& v1, const VertexSet& v2,
                              const VertexSet& v3);

// Structural re-checks for the outcomes; nullopt means valid.
std::optional<std::string> validate_three_exits(const Graph& h, const VertexSet& v1,
                                                const VertexSet& v2, const VertexSet& v3,
                                                const ThreeExitsOutcome& outcome);

}  // namespace prismatic
