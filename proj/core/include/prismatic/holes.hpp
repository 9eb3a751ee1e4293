#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "prismatic/errors.hpp"
#include "prismatic/graph.hpp"
#include "prismatic/structures.hpp"

namespace prismatic {

// Looks for a hole of length at least 5. Works by scanning chordless paths
// a-b-c and testing whether a and c stay connected after deleting N(a)∩N(c)
// and N(b)\{a,c}; the first surviving triple (lexicographic) yields the
// witness: shortest a-c path in the pruned graph, closed through b.
// Quadratic-ish and witness-producing, unlike the brute-force enumerator.
std::optional<HoleWitness> find_long_hole(const Graph& g);

// Same search on the complement; the cycle is an antihole of g.
std::optional<AntiholeWitness> find_long_antihole(const Graph& g);

// All chordless cycles with min_len <= length <= max_len, each reported once
// in canonical orientation: smallest vertex first, then the smaller of its
// two cycle neighbours. Output sorted lexicographically by vertex sequence.
// Throws BudgetExceeded when the backtracking tree outgrows `budget` nodes.
std::vector<HoleWitness> enumerate_chordless_cycles(const Graph& g,
                                                    int min_len,
                                                    int max_len,
                                                    std::uint64_t budget = kDefaultBudget);

// First odd hole in the enumeration order above, scanning lengths 5, 7, ...
// ascending. Exhaustive, so only suitable for small graphs.
std::optional<HoleWitness> find_odd_hole_bruteforce(const Graph& g,
                                                    std::uint64_t budget = kDefaultBudget);

struct BergeCertificate {
  bool berge = false;
  std::optional<HoleWitness> odd_hole;
  std::optional<AntiholeWitness> odd_antihole;
};

// Exhaustive Berge test for small instances: searches odd holes in g, then
// odd holes in the complement. Exactly one certificate is set when not Berge.
BergeCertificate is_berge_desk(const Graph& g, std::uint64_t budget = kDefaultBudget);

}  // namespace prismatic
