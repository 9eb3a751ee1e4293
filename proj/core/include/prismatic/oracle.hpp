#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <variant>

#include "prismatic/errors.hpp"
#include "prismatic/graph.hpp"
#include "prismatic/structures.hpp"

namespace prismatic {

// Whole-graph structural deciders: does g itself (not some induced subgraph)
// form a prism / a pyramid?  Cheap degree and edge-count filters first, then
// explicit path walks; the returned witness is revalidated before return.
std::optional<PrismWitness> is_prism(const Graph& g);
std::optional<PyramidWitness> is_pyramid(const Graph& g);

enum class OracleKind {
  PrismAny,
  PrismOdd,
  PrismEven,
  Pyramid,
  LgSubdivK4,
  LgProperSubdivK4,
  LgBipartiteSubdivK4,
  OddHole,
  AntiholeGeq5,
};

const char* oracle_kind_name(OracleKind k);
std::optional<OracleKind> oracle_kind_from_name(const std::string& name);

struct OracleOptions {
  // Cap on examined vertex subsets (structure kinds) and on enumeration
  // nodes (cycle kinds).
  std::uint64_t budget = kDefaultBudget;
};

using OracleWitness =
    std::variant<PrismWitness, PyramidWitness, LGK4Witness, HoleWitness, AntiholeWitness>;

// Exhaustive reference search for an induced structure of the given kind.
// Structure kinds scan vertex subsets by cardinality, lexicographic within a
// cardinality; the first subset inducing the structure wins.  Exponential by
// design: a definitional baseline for cross-checking the real detectors.
std::optional<OracleWitness> oracle_find(const Graph& g, OracleKind kind,
                                         const OracleOptions& opts = {});

struct BuiltLgk4 {
  Graph graph;
  LGK4Witness witness;
};

// Line graph of K4 with rung (x,y) subdivided; rung_lengths follows the pair
// order (0,1),(0,2),(0,3),(1,2),(1,3),(2,3) and gives the edge count of each
// rung path in the line graph — 0 means the two triangles share a vertex
// (that edge of K4 not subdivided).
BuiltLgk4 build_lg_subdivided_k4(const std::array<int, 6>& rung_lengths);

// Exact clique number / chromatic number by branch and bound; reference
// implementations for small graphs only.
int oracle_clique_number(const Graph& g);
int oracle_chromatic_number(const Graph& g);

}  // namespace prismatic
