#ifndef PRISMATIC_COLORING_HPP
#define PRISMATIC_COLORING_HPP

#include <cstdint>
#include <vector>

#include "prismatic/errors.hpp"
#include "prismatic/graph.hpp"
#include "prismatic/parity.hpp"

namespace prismatic {

// True iff every chordless path between the non-adjacent vertices x and y has
// an even number of edges (vacuously true when no such path exists).
// Backtracking enumeration; throws std::invalid_argument on adjacent or
// invalid x,y and BudgetExceeded past `budget` visited nodes.
bool is_even_pair_definitional(const Graph& g, VertexId x, VertexId y,
                               std::uint64_t budget = kDefaultBudget);

// Same question decided through the desk Berge oracle: append a vertex
// adjacent exactly to {x, y} and test whether the result stays Berge.
// Only equivalent to the definitional test when g itself is Berge; with
// checking enabled (mode Auto on small inputs, or Checked) a non-Berge g is
// rejected with PreconditionViolation.
bool is_even_pair_via_berge(const Graph& g, VertexId x, VertexId y,
                            PrecondMode mode = PrecondMode::Auto,
                            std::uint64_t budget = kDefaultBudget);

// One contraction step: the two groups of original vertices that were merged.
struct ContractionStep {
  std::vector<VertexId> group_x;
  std::vector<VertexId> group_y;
};

struct Coloring {
  std::vector<int> color;  // per original vertex, in 0..palette-1
  int palette = 0;
  std::vector<ContractionStep> trace;
};

// Color a class-A member by repeated contraction: while the current graph is
// not a clique, contract the first non-adjacent pair (ascending) that is an
// even pair and whose contraction stays in the class, then color the final
// clique and pull the colors back through the trace.  Even-pair contraction
// preserves both clique and chromatic number, so the palette is optimal.
// Throws PreconditionViolation when g is not recognized as a member.
Coloring color_class_a(const Graph& g, std::uint64_t budget = kDefaultBudget);

}  // namespace prismatic

#endif
