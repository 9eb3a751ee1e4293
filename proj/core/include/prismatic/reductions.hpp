#ifndef PRISMATIC_REDUCTIONS_HPP
#define PRISMATIC_REDUCTIONS_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "prismatic/errors.hpp"
#include "prismatic/graph.hpp"
#include "prismatic/structures.hpp"

namespace prismatic {

struct Literal {
  int var = 0;  // 0-based variable index
  bool positive = true;
};

struct CnfFormula {
  int variables = 0;
  std::vector<std::array<Literal, 3>> clauses;  // exactly three literals each
};

struct TruthAssignment {
  std::vector<bool> value;
};

bool satisfies(const CnfFormula& f, const TruthAssignment& t);

// Exhaustive satisfiability check (intended for small formulas).
std::optional<TruthAssignment> sat_bruteforce(const CnfFormula& f);

// Standard DIMACS CNF ("p cnf <vars> <clauses>", clauses of integers ended by
// 0); every clause must have exactly three literals.  Throws ParseError.
CnfFormula parse_dimacs_cnf(const std::string& text);

// An instance of the hole-through-two-vertices problem: a triangle-free graph
// with two distinguished non-adjacent vertices of degree 2.
struct PiInstance {
  Graph graph;
  VertexId a = -1;
  VertexId b = -1;
  std::vector<std::string> names;  // one name per vertex

  // Set only by build_pi_instance: the source formula the gadgets encode.
  CnfFormula formula;
};

// Wrap a hand-built graph after validating the instance invariants
// (triangle-free; a, b distinct, non-adjacent, both of degree 2).
// Throws PreconditionViolation when they fail.
PiInstance make_pi_instance(const Graph& g, VertexId a, VertexId b);

// Encode a 3-CNF formula as a gadget graph: one 8-vertex gadget per variable,
// one 5-vertex gadget per clause, two chain-end vertices a and b.  The formula
// is satisfiable exactly when some hole passes through both a and b.
PiInstance build_pi_instance(const CnfFormula& f);

// Search for a hole through both distinguished vertices by backtracking over
// chordless paths between the two neighbours of `a` that pass through `b`.
std::optional<HoleWitness> solve_pi_bruteforce(const PiInstance& inst,
                                               std::uint64_t budget = kDefaultBudget);

// Read a truth assignment off a hole through a and b of a formula-built
// instance (t-side selected ⟹ true).  Validates the hole's gadget structure
// and that the assignment satisfies the stored formula.
TruthAssignment extract_assignment(const PiInstance& inst, const HoleWitness& h);

struct ReducedGraph {
  Graph graph;
  std::string name;
  std::vector<std::string> vertex_names;
};

// Replace a and b by triangle gadgets hooked to their old neighbourhoods and
// join the gadgets; the result has exactly two triangles and contains a prism
// iff the instance has a hole through a and b.
ReducedGraph reduce_pi_to_prism(const PiInstance& inst);

// The eight parity variants of the prism reduction (each of three chosen
// gadget edges independently subdivided once).  Some variant contains an odd
// (resp. even) prism iff the instance has a hole through a and b.
std::vector<ReducedGraph> reduce_pi_to_odd_prism(const PiInstance& inst);
std::vector<ReducedGraph> reduce_pi_to_even_prism(const PiInstance& inst);

// Replace a and b by four corner triangles wired as a K4 frame; the result has
// exactly four triangles and contains the line graph of a proper subdivision
// of K4 iff the instance has a hole through a and b.
ReducedGraph reduce_pi_to_lgpsk4(const PiInstance& inst);

// The four parity variants of the K4-frame reduction (two attachment edges
// independently subdivided once), targeting line graphs of bipartite
// subdivisions of K4.
std::vector<ReducedGraph> reduce_pi_to_lgbsk4(const PiInstance& inst);

}  // namespace prismatic

#endif
