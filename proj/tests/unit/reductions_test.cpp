#include "doctest.h"
#include "prismatic/oracle.hpp"
#include "prismatic/reductions.hpp"
#include "prismatic/verification.hpp"

using namespace prismatic;

namespace {

CnfFormula formula_3_1() {
  // (x1 or not x2 or x3)
  return parse_dimacs_cnf("p cnf 3 1\n1 -2 3 0\n");
}

CnfFormula unsat_pair() {
  // x1 in every polarity: (x1 x1 x1) and (-x1 -x1 -x1)
  return parse_dimacs_cnf("p cnf 1 2\n1 1 1 0\n-1 -1 -1 0\n");
}

PiInstance c6_instance() { return make_pi_instance(make_cycle(6), 0, 3); }

// C8 with the chord 0-4: every hole avoids either 2 or 6
PiInstance blocked_instance() {
  Graph g = Graph::from_edges(8, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7},
                                  {0, 7}, {0, 4}});
  return make_pi_instance(g, 2, 6);
}

bool any_contains(const std::vector<ReducedGraph>& variants, OracleKind k) {
  for (const auto& r : variants)
    if (oracle_find(r.graph, k).has_value()) return true;
  return false;
}

}  // namespace

TEST_CASE("dimacs parsing") {
  CnfFormula f = parse_dimacs_cnf("c a comment\np cnf 3 2\n1 -2 3 0\n-1 2 -3 0\n");
  CHECK(f.variables == 3);
  REQUIRE(f.clauses.size() == 2);
  CHECK(f.clauses[0][0].var == 0);
  CHECK(f.clauses[0][0].positive);
  CHECK(f.clauses[0][1].var == 1);
  CHECK_FALSE(f.clauses[0][1].positive);
  CHECK(f.clauses[0][2].var == 2);
  CHECK(f.clauses[1][2].var == 2);
  CHECK_FALSE(f.clauses[1][2].positive);

  CHECK_THROWS_AS(parse_dimacs_cnf("p cnf 2 1\n1 -2 0\n"), ParseError);  // two literals
  CHECK_THROWS_AS(parse_dimacs_cnf("1 2 3 0\n"), ParseError);            // no header
  CHECK_THROWS_AS(parse_dimacs_cnf("p cnf 2 1\n1 2 5 0\n"), ParseError); // var out of range
}

TEST_CASE("satisfaction basics") {
  CnfFormula f = formula_3_1();
  TruthAssignment t{{false, true, false}};  // every literal of the clause is false
  CHECK_FALSE(satisfies(f, t));
  t.value = {true, true, false};
  CHECK(satisfies(f, t));

  auto model = sat_bruteforce(f);
  REQUIRE(model.has_value());
  CHECK(satisfies(f, *model));

  CHECK_FALSE(sat_bruteforce(unsat_pair()).has_value());
}

TEST_CASE("formula gadgets have the promised shape") {
  CnfFormula f = formula_3_1();
  PiInstance inst = build_pi_instance(f);
  CHECK(inst.graph.order() == 31);   // 3 * 8 + 1 * 5 + 2
  CHECK(inst.graph.edge_count() == 51);
  CHECK(inst.graph.degree(inst.a) == 2);
  CHECK(inst.graph.degree(inst.b) == 2);
  CHECK_FALSE(inst.graph.adjacent(inst.a, inst.b));
  CHECK(triangles(inst.graph).empty());
  CHECK(inst.names.size() == 31);

  PiInstance pair = build_pi_instance(unsat_pair());
  CHECK(pair.graph.order() == 20);   // 1 * 8 + 2 * 5 + 2
  CHECK(pair.graph.edge_count() == 40);
}

TEST_CASE("hand built instances are validated") {
  PiInstance ok = c6_instance();
  CHECK(ok.a == 0);
  CHECK(ok.b == 3);
  CHECK(ok.names.size() == 6);

  CHECK_THROWS_AS(make_pi_instance(make_cycle(6), 0, 1), PreconditionViolation);  // adjacent
  CHECK_THROWS_AS(make_pi_instance(make_path(6), 0, 5), PreconditionViolation);   // degree 1
  Graph chorded = Graph::from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}, {0, 2}});
  CHECK_THROWS_AS(make_pi_instance(chorded, 1, 3), PreconditionViolation);        // triangle
}

TEST_CASE("searching for a hole through both vertices") {
  auto through = solve_pi_bruteforce(c6_instance());
  REQUIRE(through.has_value());
  CHECK(through->length() == 6);

  // theta graph: three internally disjoint 2-3-3 paths between 2 and 3
  Graph theta = Graph::from_edges(7, {{0, 2}, {2, 1}, {0, 3}, {3, 4}, {4, 1}, {0, 5},
                                      {5, 6}, {6, 1}});
  PiInstance tinst = make_pi_instance(theta, 2, 3);
  auto found = solve_pi_bruteforce(tinst);
  REQUIRE(found.has_value());
  CHECK_FALSE(validate_hole(theta, *found, 4).has_value());
  bool has2 = false, has3 = false;
  for (VertexId v : found->cycle) {
    has2 = has2 || v == 2;
    has3 = has3 || v == 3;
  }
  CHECK(has2);
  CHECK(has3);

  CHECK_FALSE(solve_pi_bruteforce(blocked_instance()).has_value());
}

TEST_CASE("solving a satisfiable formula instance") {
  PiInstance inst = build_pi_instance(formula_3_1());
  auto hole = solve_pi_bruteforce(inst);
  REQUIRE(hole.has_value());
  CHECK_FALSE(validate_hole(inst.graph, *hole, 4).has_value());
  TruthAssignment t = extract_assignment(inst, *hole);
  CHECK(satisfies(inst.formula, t));

  CHECK_FALSE(solve_pi_bruteforce(build_pi_instance(unsat_pair())).has_value());
}

TEST_CASE("reduction to a prism") {
  ReducedGraph yes = reduce_pi_to_prism(c6_instance());
  CHECK(yes.graph.order() == 14);  // 6 - 2 + 2 * 3 + ... the two gadget triangles
  CHECK(triangles(yes.graph).size() == 2);
  CHECK(yes.vertex_names.size() == 14);
  CHECK_FALSE(yes.name.empty());
  CHECK(oracle_find(yes.graph, OracleKind::PrismAny).has_value());

  ReducedGraph no = reduce_pi_to_prism(blocked_instance());
  CHECK(triangles(no.graph).size() == 2);
  CHECK_FALSE(oracle_find(no.graph, OracleKind::PrismAny).has_value());
}

TEST_CASE("parity variants of the prism reduction") {
  auto odd_yes = reduce_pi_to_odd_prism(c6_instance());
  CHECK(odd_yes.size() == 8);
  CHECK(any_contains(odd_yes, OracleKind::PrismOdd));

  auto odd_no = reduce_pi_to_odd_prism(blocked_instance());
  CHECK(odd_no.size() == 8);
  CHECK_FALSE(any_contains(odd_no, OracleKind::PrismOdd));

  auto even_yes = reduce_pi_to_even_prism(c6_instance());
  CHECK(even_yes.size() == 8);
  CHECK(any_contains(even_yes, OracleKind::PrismEven));

  auto even_no = reduce_pi_to_even_prism(blocked_instance());
  CHECK_FALSE(any_contains(even_no, OracleKind::PrismEven));
}

TEST_CASE("reduction to a line graph frame") {
  ReducedGraph yes = reduce_pi_to_lgpsk4(c6_instance());
  CHECK(yes.graph.order() == 16);
  CHECK(triangles(yes.graph).size() == 4);
  CHECK(oracle_find(yes.graph, OracleKind::LgProperSubdivK4).has_value());

  ReducedGraph no = reduce_pi_to_lgpsk4(blocked_instance());
  CHECK(triangles(no.graph).size() == 4);
  CHECK_FALSE(oracle_find(no.graph, OracleKind::LgProperSubdivK4).has_value());

  auto bip_yes = reduce_pi_to_lgbsk4(c6_instance());
  CHECK(bip_yes.size() == 4);
  CHECK(any_contains(bip_yes, OracleKind::LgBipartiteSubdivK4));

  auto bip_no = reduce_pi_to_lgbsk4(blocked_instance());
  CHECK(bip_no.size() == 4);
  CHECK_FALSE(any_contains(bip_no, OracleKind::LgBipartiteSubdivK4));
}

TEST_CASE("variant names are distinct") {
  auto variants = reduce_pi_to_odd_prism(c6_instance());
  for (std::size_t i = 0; i < variants.size(); ++i)
    for (std::size_t j = i + 1; j < variants.size(); ++j)
      CHECK(variants[i].name != variants[j].name);
}
