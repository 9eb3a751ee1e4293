#pragma once

#include <cstdint>
#include <optional>

#include "prismatic/errors.hpp"
#include "prismatic/graph.hpp"
#include "prismatic/structures.hpp"

namespace prismatic {

// The detectors in this header are only correct on graphs with no odd hole.
// Checked mode verifies that up front (exhaustively — affordable on small
// inputs only) and throws PreconditionViolation with the hole as detail.
// Auto picks Checked below kAutoCheckedMaxOrder vertices, Unchecked from
// there on.
enum class PrecondMode { Auto, Checked, Unchecked };

inline constexpr int kAutoCheckedMaxOrder = 16;

struct DetectOptions {
  PrecondMode mode = PrecondMode::Auto;
  std::uint64_t hole_budget = kDefaultBudget;
};

bool precondition_check_enabled(const Graph& g, const DetectOptions& opts);

// Does `s` induce the line graph of a subdivision of K4 in g?  Exact edge
// accounting against the candidate decomposition; the witness carries the
// proper / bipartite flags of the underlying subdivision.  No precondition.
std::optional<LGK4Witness> check_lgk4_structure(const Graph& g, const VertexSet& s);

// First induced even prism, scanning triangle pairs, pairings and midpoint
// triples in lexicographic order.
std::optional<PrismWitness> detect_even_prism(const Graph& g, const DetectOptions& opts = {});

// First induced line graph of a proper subdivision of K4, scanning triangle
// quadruples, corner roles and rung midpoints.
std::optional<LGK4Witness> detect_lg_proper_subdivision_k4(const Graph& g,
                                                           const DetectOptions& opts = {});

// Same search; with no odd hole around, any such line graph has a bipartite
// underlying subdivision, so a non-bipartite find reports a precondition
// violation instead of a result.
std::optional<LGK4Witness> detect_lg_bipartite_subdivision_k4(const Graph& g,
                                                              const DetectOptions& opts = {});

// First induced odd prism: either carved out of a line-graph find by deleting
// one rung, or — when no such line graph exists — assembled from a triangle
// pair by constrained shortest paths.
std::optional<PrismWitness> detect_odd_prism(const Graph& g, const DetectOptions& opts = {});

}  // namespace prismatic
