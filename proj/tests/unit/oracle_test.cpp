#include <variant>

#include "doctest.h"
#include "prismatic/oracle.hpp"
#include "prismatic/verification.hpp"

using namespace prismatic;

namespace {

// validate whichever witness alternative is held, against g
std::optional<std::string> validate_any(const Graph& g, const OracleWitness& w) {
  return std::visit(
      [&](const auto& x) -> std::optional<std::string> {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, PrismWitness>) return validate_prism(g, x);
        else if constexpr (std::is_same_v<T, PyramidWitness>) return validate_pyramid(g, x);
        else if constexpr (std::is_same_v<T, LGK4Witness>) return validate_lgk4(g, x);
        else if constexpr (std::is_same_v<T, HoleWitness>) return validate_hole(g, x, 4);
        else return validate_antihole(g, x, 5);
      },
      w);
}

bool finds(const Graph& g, OracleKind k) { return oracle_find(g, k).has_value(); }

}  // namespace

TEST_CASE("whole graph prism decider") {
  auto p = is_prism(make_prism6());
  REQUIRE(p.has_value());
  CHECK(p->parity() == Parity::Odd);
  CHECK_FALSE(validate_prism(make_prism6(), *p).has_value());

  auto e = is_prism(make_evenprism9());
  REQUIRE(e.has_value());
  CHECK(e->parity() == Parity::Even);

  CHECK(is_prism(complement(make_cycle(6))).has_value());
  CHECK_FALSE(is_prism(make_cycle(6)).has_value());
  CHECK_FALSE(is_prism(make_pyramid6()).has_value());
  CHECK_FALSE(is_prism(make_complete(6)).has_value());
}

TEST_CASE("whole graph pyramid decider") {
  auto p = is_pyramid(make_pyramid6());
  REQUIRE(p.has_value());
  CHECK(p->apex == 0);
  CHECK_FALSE(validate_pyramid(make_pyramid6(), *p).has_value());

  CHECK(is_pyramid(make_pyramid7_balanced()).has_value());
  CHECK(is_pyramid(make_pyramid7_unbalanced()).has_value());
  CHECK_FALSE(is_pyramid(make_prism6()).has_value());
  CHECK_FALSE(is_pyramid(make_cycle(6)).has_value());
}

TEST_CASE("reference search on the prism") {
  Graph g = make_prism6();
  CHECK(finds(g, OracleKind::PrismAny));
  CHECK(finds(g, OracleKind::PrismOdd));
  CHECK_FALSE(finds(g, OracleKind::PrismEven));
  CHECK_FALSE(finds(g, OracleKind::Pyramid));
  CHECK_FALSE(finds(g, OracleKind::OddHole));

  auto anti = oracle_find(g, OracleKind::AntiholeGeq5);
  REQUIRE(anti.has_value());
  CHECK(std::get<AntiholeWitness>(*anti).length() == 6);
  CHECK_FALSE(validate_any(g, *anti).has_value());
}

TEST_CASE("reference search parity split") {
  Graph g = make_evenprism9();
  auto even = oracle_find(g, OracleKind::PrismEven);
  REQUIRE(even.has_value());
  CHECK_FALSE(validate_any(g, *even).has_value());
  CHECK_FALSE(finds(g, OracleKind::PrismOdd));
}

TEST_CASE("reference search on cycles") {
  Graph c5 = make_cycle(5);
  auto hole = oracle_find(c5, OracleKind::OddHole);
  REQUIRE(hole.has_value());
  CHECK(std::get<HoleWitness>(*hole).length() == 5);
  auto anti = oracle_find(c5, OracleKind::AntiholeGeq5);
  REQUIRE(anti.has_value());
  CHECK(std::get<AntiholeWitness>(*anti).length() == 5);

  Graph c6 = make_cycle(6);
  for (OracleKind k : {OracleKind::PrismAny, OracleKind::PrismOdd, OracleKind::PrismEven,
                       OracleKind::Pyramid, OracleKind::LgSubdivK4, OracleKind::LgProperSubdivK4,
                       OracleKind::LgBipartiteSubdivK4, OracleKind::OddHole,
                       OracleKind::AntiholeGeq5})
    CHECK_FALSE(finds(c6, k));
}

TEST_CASE("reference search for line graph structures") {
  auto oct = build_lg_subdivided_k4({0, 0, 0, 0, 0, 0});
  auto any = oracle_find(oct.graph, OracleKind::LgSubdivK4);
  REQUIRE(any.has_value());
  CHECK_FALSE(validate_any(oct.graph, *any).has_value());
  CHECK_FALSE(finds(oct.graph, OracleKind::LgProperSubdivK4));

  auto ones = build_lg_subdivided_k4({1, 1, 1, 1, 1, 1});
  auto proper = oracle_find(ones.graph, OracleKind::LgProperSubdivK4);
  REQUIRE(proper.has_value());
  CHECK(std::get<LGK4Witness>(*proper).proper);
  CHECK_FALSE(validate_any(ones.graph, *proper).has_value());
  auto bip = oracle_find(ones.graph, OracleKind::LgBipartiteSubdivK4);
  REQUIRE(bip.has_value());
  CHECK(std::get<LGK4Witness>(*bip).bipartite);
}

TEST_CASE("oracle kind names round trip") {
  for (OracleKind k : {OracleKind::PrismAny, OracleKind::PrismOdd, OracleKind::PrismEven,
                       OracleKind::Pyramid, OracleKind::LgSubdivK4, OracleKind::LgProperSubdivK4,
                       OracleKind::LgBipartiteSubdivK4, OracleKind::OddHole,
                       OracleKind::AntiholeGeq5}) {
    auto back = oracle_kind_from_name(oracle_kind_name(k));
    REQUIRE(back.has_value());
    CHECK(*back == k);
  }
  CHECK_FALSE(oracle_kind_from_name("no-such-kind").has_value());
}

TEST_CASE("oracle budget") {
  OracleOptions tight;
  tight.budget = 5;
  CHECK_THROWS_AS(oracle_find(make_petersen(), OracleKind::PrismAny, tight), BudgetExceeded);
}

TEST_CASE("clique number reference") {
  CHECK(oracle_clique_number(make_complete(4)) == 4);
  CHECK(oracle_clique_number(make_complete(7)) == 7);
  CHECK(oracle_clique_number(make_cycle(5)) == 2);
  CHECK(oracle_clique_number(make_prism6()) == 3);
  CHECK(oracle_clique_number(make_petersen()) == 2);
  CHECK(oracle_clique_number(Graph::from_edges(3, {})) == 1);
}

TEST_CASE("chromatic number reference") {
  CHECK(oracle_chromatic_number(make_cycle(5)) == 3);
  CHECK(oracle_chromatic_number(make_cycle(6)) == 2);
  CHECK(oracle_chromatic_number(make_cycle(7)) == 3);
  CHECK(oracle_chromatic_number(make_petersen()) == 3);
  CHECK(oracle_chromatic_number(make_prism6()) == 3);
  CHECK(oracle_chromatic_number(make_complete(4)) == 4);
  CHECK(oracle_chromatic_number(Graph::from_edges(3, {})) == 1);
}

TEST_CASE("line graph builder") {
  auto oct = build_lg_subdivided_k4({0, 0, 0, 0, 0, 0});
  CHECK(oct.graph.order() == 6);
  CHECK(oct.graph.edge_count() == 12);
  CHECK_FALSE(oct.witness.proper);
  CHECK_FALSE(validate_lgk4(oct.graph, oct.witness).has_value());

  auto ones = build_lg_subdivided_k4({1, 1, 1, 1, 1, 1});
  CHECK(ones.graph.order() == 12);
  CHECK(ones.graph.edge_count() == 18);
  CHECK(ones.witness.proper);
  CHECK(ones.witness.bipartite);
  CHECK_FALSE(validate_lgk4(ones.graph, ones.witness).has_value());

  auto two = build_lg_subdivided_k4({2, 1, 1, 1, 1, 1});
  CHECK(two.graph.order() == 13);
  CHECK_FALSE(two.witness.bipartite);
  CHECK_FALSE(validate_lgk4(two.graph, two.witness).has_value());

  auto big = build_lg_subdivided_k4({3, 1, 1, 1, 1, 3});
  CHECK(big.witness.bipartite);
  CHECK_FALSE(validate_lgk4(big.graph, big.witness).has_value());
}
