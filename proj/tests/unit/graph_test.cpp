#include <algorithm>
#include <set>

#include "doctest.h"
#include "prismatic/graph.hpp"
#include "prismatic/verification.hpp"

using namespace prismatic;

TEST_CASE("graph6 decode of a five-cycle") {
  Graph g = parse_graph6("DUW");
  CHECK(g.order() == 5);
  CHECK(g.edge_count() == 5);
  for (VertexId v = 0; v < 5; ++v) CHECK(g.degree(v) == 2);
  CHECK(is_chordless_cycle_of(g, {0, 2, 4, 1, 3}));
  CHECK(encode_graph6(g) == "DUW");
}

TEST_CASE("graph6 decode of a four-armed star") {
  Graph g = parse_graph6("D?{");
  CHECK(g.order() == 5);
  CHECK(g.edge_count() == 4);
  CHECK(g.degree(4) == 4);
  for (VertexId v = 0; v < 4; ++v) {
    CHECK(g.degree(v) == 1);
    CHECK(g.adjacent(v, 4));
  }
  CHECK(encode_graph6(g) == "D?{");
}

TEST_CASE("graph6 round trip on assorted graphs") {
  for (const Graph& g : {make_petersen(), make_prism6(), make_cycle(7), make_complete(6),
                         Graph::from_edges(1, {}), Graph::from_edges(2, {})}) {
    Graph back = parse_graph6(encode_graph6(g));
    CHECK(back.order() == g.order());
    CHECK(back.edges() == g.edges());
  }
}

TEST_CASE("graph6 parse failures carry positions") {
  CHECK_THROWS_AS(parse_graph6(""), ParseError);
  CHECK_THROWS_AS(parse_graph6("D"), ParseError);      // truncated edge bits
  CHECK_THROWS_AS(parse_graph6("D\x1f?"), ParseError);  // payload byte below the alphabet
  CHECK_THROWS_AS(parse_graph6("DUW?"), ParseError);    // trailing bytes
  CHECK_THROWS_AS(parse_graph6("~~~"), ParseError);     // long form unsupported
}

TEST_CASE("edge list parsing and formatting") {
  Graph g = parse_edge_list("4 3\n0 1\n1 2\n2 3\n");
  CHECK(g.order() == 4);
  CHECK(g.edge_count() == 3);
  CHECK(g.adjacent(0, 1));
  CHECK_FALSE(g.adjacent(0, 2));
  Graph back = parse_edge_list(format_edge_list(g));
  CHECK(back.edges() == g.edges());

  CHECK_THROWS_AS(parse_edge_list("2 1\n0 5\n"), ParseError);  // vertex out of range
  CHECK_THROWS_AS(parse_edge_list("junk"), ParseError);
  CHECK_THROWS_AS(parse_edge_list("3 2\n0 1\n"), ParseError);  // fewer edges than declared
}

TEST_CASE("complement of a six-cycle is the triangular prism") {
  Graph g = complement(make_cycle(6));
  CHECK(g.edge_count() == 9);
  for (VertexId v = 0; v < 6; ++v) CHECK(g.degree(v) == 3);
  // triangles on the even and odd classes, a perfect matching between them
  CHECK(g.adjacent(0, 2));
  CHECK(g.adjacent(2, 4));
  CHECK(g.adjacent(0, 4));
  CHECK(g.adjacent(1, 3));
  CHECK(g.adjacent(3, 5));
  CHECK(g.adjacent(1, 5));
  CHECK(g.adjacent(0, 3));
}

TEST_CASE("induced subgraph keeps ascending ids") {
  Graph g = make_prism6();
  auto sub = induced_subgraph(g, VertexSet::of({0, 1, 2, 3}));
  CHECK(sub.graph.order() == 4);
  CHECK(sub.graph.edge_count() == 4);  // triangle plus the pendant edge 0-3
  CHECK(sub.graph.degree(0) == 3);
  CHECK(sub.graph.degree(3) == 1);
  CHECK(sub.old_of_new == std::vector<VertexId>{0, 1, 2, 3});
  CHECK(sub.new_of_old[4] == -1);
}

TEST_CASE("connected components") {
  Graph g = make_prism6();
  auto one = connected_components(g, VertexSet::of({3, 4, 5}));
  REQUIRE(one.size() == 1);
  CHECK(one[0] == std::vector<VertexId>{3, 4, 5});

  Graph two = Graph::from_edges(4, {{0, 1}, {2, 3}});
  auto comps = connected_components(two);
  REQUIRE(comps.size() == 2);
  CHECK(comps[0] == std::vector<VertexId>{0, 1});
  CHECK(comps[1] == std::vector<VertexId>{2, 3});
}

TEST_CASE("constrained shortest paths") {
  Graph g = make_cycle(6);
  auto p = shortest_path_constrained(g, 0, 3, g.vertices());
  REQUIRE(p.has_value());
  CHECK(p->length() == 3);
  CHECK(is_chordless_path_of(g, *p));

  auto q = shortest_path_constrained(g, 0, 3, VertexSet::of({0, 3, 4, 5}));
  REQUIRE(q.has_value());
  CHECK(q->v == std::vector<VertexId>{0, 5, 4, 3});

  CHECK_FALSE(shortest_path_constrained(g, 0, 3, VertexSet::of({0, 3})).has_value());
}

TEST_CASE("triangle listing") {
  auto tris = triangles(make_prism6());
  REQUIRE(tris.size() == 2);
  CHECK(tris[0].v == std::array<VertexId, 3>{0, 1, 2});
  CHECK(tris[1].v == std::array<VertexId, 3>{3, 4, 5});
  CHECK(triangles(make_cycle(6)).empty());
  CHECK(triangles(make_complete(4)).size() == 4);
}

TEST_CASE("contracting a non-adjacent pair") {
  Graph g = make_cycle(6);
  Contraction c = contract(g, 0, 2);
  CHECK(c.graph.order() == 5);
  CHECK(c.graph.edge_count() == 5);
  CHECK(c.merged == 4);
  CHECK(c.new_of_old[0] == c.merged);
  CHECK(c.new_of_old[2] == c.merged);
  // survivors 1,3,4,5 keep their relative order as 0,1,2,3
  CHECK(c.new_of_old[1] == 0);
  CHECK(c.new_of_old[3] == 1);
  CHECK(c.new_of_old[4] == 2);
  CHECK(c.new_of_old[5] == 3);
  CHECK(c.graph.adjacent(c.merged, c.new_of_old[1]));
  CHECK(c.graph.adjacent(c.merged, c.new_of_old[3]));
  CHECK(c.graph.adjacent(c.merged, c.new_of_old[5]));
  CHECK(c.graph.adjacent(c.new_of_old[3], c.new_of_old[4]));
  CHECK(c.graph.adjacent(c.new_of_old[4], c.new_of_old[5]));
}

TEST_CASE("clique, path and cycle predicates") {
  Graph k4 = make_complete(4);
  CHECK(is_clique(k4, k4.vertices()));
  CHECK_FALSE(is_clique(make_cycle(4), VertexSet::of({0, 1, 2, 3})));
  CHECK(is_clique(make_cycle(4), VertexSet::of({0, 1})));

  Graph c6 = make_cycle(6);
  CHECK(is_path_of(c6, Path{{0, 1, 2, 3}}));
  CHECK(is_chordless_path_of(c6, Path{{0, 1, 2, 3}}));
  CHECK_FALSE(is_path_of(c6, Path{{0, 2}}));

  Graph pr = make_prism6();
  CHECK(is_path_of(pr, Path{{0, 1, 2}}));
  CHECK_FALSE(is_chordless_path_of(pr, Path{{0, 1, 2}}));  // chord 0-2

  CHECK(is_chordless_cycle_of(c6, {0, 1, 2, 3, 4, 5}));
  CHECK_FALSE(is_chordless_cycle_of(c6, {0, 1, 2, 3}));
  CHECK(is_chordless_cycle_of(pr, {0, 1, 4, 3}));
  CHECK_FALSE(is_chordless_cycle_of(pr, {0, 1, 2}));  // triangles are not holes
}

TEST_CASE("vertex set basics") {
  VertexSet s = VertexSet::of({1, 4, 7});
  CHECK(s.count() == 3);
  CHECK(s.test(4));
  CHECK_FALSE(s.test(2));
  CHECK(s.to_vector() == std::vector<VertexId>{1, 4, 7});
  CHECK(s.first() == 1);
  CHECK(s.next(1) == 4);
  CHECK(s.next(7) == -1);
  CHECK(VertexSet::universe(5).count() == 5);
}
