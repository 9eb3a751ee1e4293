#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "prismatic/bits.hpp"
#include "prismatic/errors.hpp"

namespace prismatic {

using VertexId = int;

// Chordless or general path, stored as the vertex sequence.
struct Path {
    std::vector<VertexId> v;

    int length() const { return static_cast<int>(v.size()) - 1; }
    VertexId front() const { return v.front(); }
    VertexId back() const { return v.back(); }
    bool odd() const { return length() % 2 == 1; }
};

struct Triangle {
    std::array<VertexId, 3> v;  // ascending

    friend bool operator==(const Triangle&, const Triangle&) = default;
};

// Immutable simple undirected graph with bitset adjacency rows.
// Maximum supported order is VertexSet::kMaxBits (512).
class Graph {
  public:
    Graph() = default;

    static Graph empty(int n);
    static Graph from_edges(int n, const std::vector<std::pair<VertexId, VertexId>>& edges);

    int order() const { return n_; }
    int edge_count() const { return m_; }

    bool adjacent(VertexId u, VertexId v) const { return rows_[u].test(v); }
    const VertexSet& neighbors(VertexId v) const { return rows_[v]; }
    int degree(VertexId v) const { return rows_[v].count(); }
    VertexSet vertices() const { return VertexSet::universe(n_); }

    std::vector<std::pair<VertexId, VertexId>> edges() const;

    friend bool operator==(const Graph&, const Graph&) = default;

  private:
    int n_ = 0;
    int m_ = 0;
    std::vector<VertexSet> rows_;
};

// ---- parsing and encoding ----

// Parse one graph6 line (short form, order <= 62).  Throws ParseError with a
// byte offset on malformed input.
Graph parse_graph6(const std::string& line);

// Encode as graph6, order <= 62.
std::string encode_graph6(const Graph& g);

// Text edge list: first line "n m", then m lines "u v".  Duplicate edges
// collapse; loops and out-of-range endpoints are parse errors.
Graph parse_edge_list(const std::string& text);

std::string format_edge_list(const Graph& g);

// ---- pure graph operations ----

Graph complement(const Graph& g);

// Induced subgraph on `keep`.  New ids are the old ones in ascending order;
// old_of_new[i] gives the original id of the new vertex i.
struct InducedSubgraph {
    Graph graph;
    std::vector<VertexId> old_of_new;
    std::vector<VertexId> new_of_old;  // -1 for dropped vertices
};
InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& keep);

// Connected components of the subgraph induced by `within`, each component
// listed ascending, components ordered by smallest member.
std::vector<std::vector<VertexId>> connected_components(const Graph& g, const VertexSet& within);
std::vector<std::vector<VertexId>> connected_components(const Graph& g);

// Deterministic BFS shortest path from src to dst whose interior vertices all
// lie in `allowed_interior` (the endpoints themselves need not).  Ties break
// toward the smallest vertex id.  The result is chordless whenever it is a
// shortest path in the allowed induced graph, which BFS guarantees.
std::optional<Path> shortest_path_constrained(const Graph& g, VertexId src, VertexId dst,
                                              const VertexSet& allowed_interior);

// All triangles, ascending lexicographic.
std::vector<Triangle> triangles(const Graph& g);

// Contract the non-adjacent pair x,y into one vertex.  Remaining vertices keep
// their relative order and occupy ids 0..n-3; the merged vertex gets id n-2.
struct Contraction {
    Graph graph;
    VertexId merged;                    // id of the merged vertex (n-2)
    std::vector<VertexId> old_of_new;   // for i != merged, the original id
    std::vector<VertexId> new_of_old;   // maps both x and y to `merged`
};
Contraction contract(const Graph& g, VertexId x, VertexId y);

// ---- small helpers used across modules ----

bool is_clique(const Graph& g, const VertexSet& s);

// Whether `p` is a path of g: consecutive vertices adjacent, all distinct.
bool is_path_of(const Graph& g, const Path& p);

// Whether `p` is a chordless path of g (no edge between non-consecutive
// vertices).
bool is_chordless_path_of(const Graph& g, const Path& p);

// Whether `cycle` lists a chordless cycle of g in cyclic order.
bool is_chordless_cycle_of(const Graph& g, const std::vector<VertexId>& cycle);

}  // namespace prismatic
