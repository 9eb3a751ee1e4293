#include <algorithm>

#include "doctest.h"
#include "prismatic/oracle.hpp"
#include "prismatic/parity.hpp"
#include "prismatic/verification.hpp"

using namespace prismatic;

namespace {

Graph union_with_isolated(const Graph& g, int extra) {
  return Graph::from_edges(g.order() + extra, g.edges());
}

}  // namespace

TEST_CASE("precondition mode selection") {
  CHECK(kAutoCheckedMaxOrder == 16);
  Graph small = make_cycle(6);
  Graph big = union_with_isolated(make_cycle(6), 12);  // order 18
  CHECK(precondition_check_enabled(small, {PrecondMode::Auto}));
  CHECK_FALSE(precondition_check_enabled(big, {PrecondMode::Auto}));
  CHECK(precondition_check_enabled(big, {PrecondMode::Checked}));
  CHECK_FALSE(precondition_check_enabled(small, {PrecondMode::Unchecked}));
}

TEST_CASE("even prism detector") {
  Graph g = make_evenprism9();
  auto w = detect_even_prism(g);
  REQUIRE(w.has_value());
  CHECK(w->parity() == Parity::Even);
  for (const auto& p : w->paths) CHECK(p.length() == 2);
  CHECK_FALSE(validate_prism(g, *w).has_value());

  CHECK_FALSE(detect_even_prism(make_prism6()).has_value());
  CHECK_FALSE(detect_even_prism(make_cycle(6)).has_value());
  CHECK_FALSE(detect_even_prism(make_complete(5)).has_value());
}

TEST_CASE("odd prism detector") {
  Graph g = make_prism6();
  auto w = detect_odd_prism(g);
  REQUIRE(w.has_value());
  CHECK(w->parity() == Parity::Odd);
  for (const auto& p : w->paths) CHECK(p.length() == 1);
  CHECK_FALSE(validate_prism(g, *w).has_value());

  // the even prism is odd-hole-free, so the detector may run and must decline
  CHECK_FALSE(detect_odd_prism(make_evenprism9()).has_value());
  CHECK_FALSE(detect_odd_prism(make_cycle(6)).has_value());
}

TEST_CASE("odd hole precondition") {
  Graph c5 = make_cycle(5);
  CHECK_THROWS_AS(detect_odd_prism(c5, {PrecondMode::Checked}), PreconditionViolation);
  CHECK_THROWS_AS(detect_even_prism(c5, {PrecondMode::Checked}), PreconditionViolation);
  try {
    detect_odd_prism(c5, {PrecondMode::Checked});
    FAIL("expected a precondition violation");
  } catch (const PreconditionViolation& e) {
    CHECK(e.detail == "0 1 2 3 4");
  }

  // Unchecked mode runs anyway; C5 holds no prism, so the answer is absent.
  CHECK_FALSE(detect_odd_prism(c5, {PrecondMode::Unchecked}).has_value());

  // Auto on a big graph skips the check entirely.
  Graph big = union_with_isolated(c5, 15);  // order 20
  CHECK_FALSE(detect_odd_prism(big).has_value());
}

TEST_CASE("line graph detector over subdivisions") {
  auto all_ones = build_lg_subdivided_k4({1, 1, 1, 1, 1, 1});
  auto w = detect_lg_proper_subdivision_k4(all_ones.graph);
  REQUIRE(w.has_value());
  CHECK(w->proper);
  CHECK_FALSE(validate_lgk4(all_ones.graph, *w).has_value());

  // one subdivided edge suffices for properness
  auto one = build_lg_subdivided_k4({1, 0, 0, 0, 0, 0});
  CHECK(one.graph.order() == 7);
  auto w1 = detect_lg_proper_subdivision_k4(one.graph);
  REQUIRE(w1.has_value());
  CHECK(w1->proper);
  std::vector<int> lens;
  for (const auto& r : w1->rungs) lens.push_back(r.length());
  std::sort(lens.begin(), lens.end());
  CHECK(lens == std::vector<int>{0, 0, 0, 0, 0, 1});
  CHECK_FALSE(validate_lgk4(one.graph, *w1).has_value());

  // the unsubdivided K4 gives the octahedron: a line graph, but not proper
  auto oct = build_lg_subdivided_k4({0, 0, 0, 0, 0, 0});
  CHECK(oct.graph.order() == 6);
  CHECK(oct.graph.edge_count() == 12);
  CHECK_FALSE(detect_lg_proper_subdivision_k4(oct.graph).has_value());

  CHECK_FALSE(detect_lg_proper_subdivision_k4(make_prism6()).has_value());
  CHECK_FALSE(detect_lg_proper_subdivision_k4(make_cycle(7)).has_value());
}

TEST_CASE("line graph detector pyramid precondition") {
  Graph pyr = make_pyramid6();
  CHECK_THROWS_AS(detect_lg_proper_subdivision_k4(pyr, {PrecondMode::Checked}),
                  PreconditionViolation);
}

TEST_CASE("bipartite line graph detector") {
  auto even = build_lg_subdivided_k4({1, 1, 1, 1, 1, 1});
  auto w = detect_lg_bipartite_subdivision_k4(even.graph);
  REQUIRE(w.has_value());
  CHECK(w->proper);
  CHECK(w->bipartite);
  CHECK_FALSE(validate_lgk4(even.graph, *w).has_value());

  // odd underlying subdivision: the graph has an odd hole, so both modes
  // refuse — Checked on the hole, Unchecked on the non-bipartite find
  auto odd = build_lg_subdivided_k4({2, 1, 1, 1, 1, 1});
  CHECK_THROWS_AS(detect_lg_bipartite_subdivision_k4(odd.graph, {PrecondMode::Checked}),
                  PreconditionViolation);
  CHECK_THROWS_AS(detect_lg_bipartite_subdivision_k4(odd.graph, {PrecondMode::Unchecked}),
                  PreconditionViolation);

  CHECK_FALSE(detect_lg_bipartite_subdivision_k4(make_cycle(6)).has_value());
}

TEST_CASE("structure check on explicit subsets") {
  auto oct = build_lg_subdivided_k4({0, 0, 0, 0, 0, 0});
  auto w = check_lgk4_structure(oct.graph, oct.graph.vertices());
  REQUIRE(w.has_value());
  for (const auto& r : w->rungs) CHECK(r.length() == 0);
  CHECK_FALSE(w->proper);
  CHECK_FALSE(w->bipartite);
  CHECK_FALSE(validate_lgk4(oct.graph, *w).has_value());

  // rung length multiset survives a build / check round trip
  for (std::array<int, 6> lens : {std::array<int, 6>{2, 0, 1, 0, 0, 0},
                                  std::array<int, 6>{1, 1, 0, 0, 2, 0},
                                  std::array<int, 6>{3, 1, 1, 1, 1, 3},
                                  std::array<int, 6>{0, 0, 0, 0, 0, 6}}) {
    auto built = build_lg_subdivided_k4(lens);
    auto got = check_lgk4_structure(built.graph, built.graph.vertices());
    REQUIRE(got.has_value());
    std::vector<int> want(lens.begin(), lens.end());
    std::vector<int> have;
    for (const auto& r : got->rungs) have.push_back(r.length());
    std::sort(want.begin(), want.end());
    std::sort(have.begin(), have.end());
    CHECK(want == have);
    CHECK_FALSE(validate_lgk4(built.graph, *got).has_value());
  }

  // subsets that are not such line graphs
  CHECK_FALSE(check_lgk4_structure(make_prism6(), make_prism6().vertices()).has_value());
  CHECK_FALSE(check_lgk4_structure(make_petersen(), make_petersen().vertices()).has_value());
  auto sub = build_lg_subdivided_k4({1, 1, 1, 1, 1, 1});
  VertexSet missing = sub.graph.vertices();
  missing.reset(0);
  CHECK_FALSE(check_lgk4_structure(sub.graph, missing).has_value());
}
