#include "prismatic/structures.hpp"

#include <algorithm>
#include <set>

namespace prismatic {

std::string parity_name(Parity p) {
    switch (p) {
        case Parity::Odd: return "odd";
        case Parity::Even: return "even";
        default: return "mixed";
    }
}

Parity PrismWitness::parity() const {
    bool all_odd = true, all_even = true;
    for (const Path& p : paths) {
        if (p.odd()) all_even = false;
        else all_odd = false;
    }
    if (all_odd) return Parity::Odd;
    if (all_even) return Parity::Even;
    return Parity::Mixed;
}

std::vector<VertexId> PrismWitness::vertex_list() const {
    std::set<VertexId> s;
    for (const Path& p : paths) s.insert(p.v.begin(), p.v.end());
    return {s.begin(), s.end()};
}

std::vector<VertexId> PyramidWitness::vertex_list() const {
    std::set<VertexId> s;
    for (const Path& p : paths) s.insert(p.v.begin(), p.v.end());
    return {s.begin(), s.end()};
}

int LGK4Witness::rung_index(int x, int y) {
    if (x > y) std::swap(x, y);
    int k = 0;
    for (int a = 0; a < 4; ++a)
        for (int b = a + 1; b < 4; ++b, ++k)
            if (a == x && b == y) return k;
    return -1;
}

const Path& LGK4Witness::rung(int x, int y) const { return rungs[rung_index(x, y)]; }

VertexId LGK4Witness::midpoint(int x, int y) const {
    // Stored rungs run from corner(min,max) to corner(max,min).
    const Path& r = rung(x, y);
    int len = r.length();
    int at = x < y ? len / 2 : len - len / 2;
    return r.v[at];
}

std::vector<VertexId> LGK4Witness::vertex_list() const {
    std::set<VertexId> s;
    for (const Path& r : rungs) s.insert(r.v.begin(), r.v.end());
    return {s.begin(), s.end()};
}

std::vector<VertexId> StructureWitness::vertex_list() const {
    return is_prism() ? prism().vertex_list() : pyramid().vertex_list();
}

std::optional<std::string> validate_hole(const Graph& g, const HoleWitness& w, int min_length) {
    if (w.length() < min_length)
        return "hole shorter than " + std::to_string(min_length);
    if (!is_chordless_cycle_of(g, w.cycle)) return "not a chordless cycle";
    return std::nullopt;
}

std::optional<std::string> validate_antihole(const Graph& g, const AntiholeWitness& w, int min_length) {
    if (w.length() < min_length)
        return "antihole shorter than " + std::to_string(min_length);
    if (!is_chordless_cycle_of(complement(g), w.cycle)) return "not a chordless cycle of the complement";
    return std::nullopt;
}

namespace {

// Expected edge accounting shared by the prism / pyramid validators: collect
// the union, make sure the induced subgraph has exactly the claimed edges.
std::optional<std::string> check_exact_edges(const Graph& g, const std::vector<VertexId>& verts,
                                             const std::set<std::pair<VertexId, VertexId>>& expected) {
    for (auto [u, v] : expected)
        if (!g.adjacent(u, v)) return "missing edge " + std::to_string(u) + "-" + std::to_string(v);
    for (std::size_t i = 0; i < verts.size(); ++i)
        for (std::size_t j = i + 1; j < verts.size(); ++j) {
            VertexId u = std::min(verts[i], verts[j]), v = std::max(verts[i], verts[j]);
            if (g.adjacent(u, v) && !expected.count({u, v}))
                return "unexpected edge " + std::to_string(u) + "-" + std::to_string(v);
        }
    return std::nullopt;
}

void add_edge(std::set<std::pair<VertexId, VertexId>>& s, VertexId u, VertexId v) {
    s.insert({std::min(u, v), std::max(u, v)});
}

}  // namespace

std::optional<std::string> validate_prism(const Graph& g, const PrismWitness& w) {
    for (int i = 0; i < 3; ++i) {
        const Path& p = w.paths[i];
        if (p.v.empty() || p.front() != w.a.v[i] || p.back() != w.b.v[i])
            return "path " + std::to_string(i) + " does not join a[" + std::to_string(i) + "] to b[" + std::to_string(i) + "]";
        if (p.length() < 1) return "path of length 0";
        if (!is_path_of(g, p)) return "path " + std::to_string(i) + " is not a path";
    }
    std::set<VertexId> all;
    for (const Path& p : w.paths)
        for (VertexId v : p.v)
            if (!all.insert(v).second) return "paths share vertex " + std::to_string(v);

    std::set<std::pair<VertexId, VertexId>> expected;
    for (int i = 0; i < 3; ++i) {
        add_edge(expected, w.a.v[i], w.a.v[(i + 1) % 3]);
        add_edge(expected, w.b.v[i], w.b.v[(i + 1) % 3]);
        for (std::size_t k = 0; k + 1 < w.paths[i].v.size(); ++k)
            add_edge(expected, w.paths[i].v[k], w.paths[i].v[k + 1]);
    }
    std::vector<VertexId> verts(all.begin(), all.end());
    return check_exact_edges(g, verts, expected);
}

std::optional<std::string> validate_pyramid(const Graph& g, const PyramidWitness& w) {
    int apex_adjacent = 0;
    for (int i = 0; i < 3; ++i) {
        const Path& p = w.paths[i];
        if (p.v.empty() || p.front() != w.apex || p.back() != w.triangle.v[i])
            return "path " + std::to_string(i) + " does not join apex to triangle vertex";
        if (p.length() < 1) return "path of length 0";
        if (!is_path_of(g, p)) return "path " + std::to_string(i) + " is not a path";
        if (g.adjacent(w.apex, w.triangle.v[i])) ++apex_adjacent;
    }
    if (apex_adjacent > 1) return "apex adjacent to more than one triangle vertex";
    std::set<VertexId> all{w.apex};
    for (const Path& p : w.paths)
        for (std::size_t k = 1; k < p.v.size(); ++k)
            if (!all.insert(p.v[k]).second) return "paths share vertex " + std::to_string(p.v[k]) + " besides the apex";

    std::set<std::pair<VertexId, VertexId>> expected;
    for (int i = 0; i < 3; ++i) {
        add_edge(expected, w.triangle.v[i], w.triangle.v[(i + 1) % 3]);
        for (std::size_t k = 0; k + 1 < w.paths[i].v.size(); ++k)
            add_edge(expected, w.paths[i].v[k], w.paths[i].v[k + 1]);
    }
    std::vector<VertexId> verts(all.begin(), all.end());
    return check_exact_edges(g, verts, expected);
}

std::optional<std::string> validate_lgk4(const Graph& g, const LGK4Witness& w) {
    if (w.rungs.size() != 6) return "expected six rungs";

    // Corner slots: diagonal unused; coinciding slots allowed only in the
    // corner(x,y) == corner(y,x) pattern of a length-0 rung.
    for (int x = 0; x < 4; ++x)
        for (int y = 0; y < 4; ++y) {
            if (x == y) continue;
            VertexId c = w.corners[x][y];
            if (c < 0 || c >= g.order()) return "corner out of range";
        }

    std::set<std::pair<VertexId, VertexId>> expected;
    std::set<VertexId> all;
    int k = 0;
    int total_rung_len = 0;
    for (int x = 0; x < 4; ++x)
        for (int y = x + 1; y < 4; ++y, ++k) {
            const Path& r = w.rungs[k];
            if (r.v.empty()) return "empty rung";
            if (r.front() != w.corners[x][y] || r.back() != w.corners[y][x])
                return "rung does not join its corner slots";
            if (r.length() == 0) {
                if (w.corners[x][y] != w.corners[y][x]) return "length-0 rung with distinct corners";
            } else if (w.corners[x][y] == w.corners[y][x]) {
                return "coinciding corners on a rung of positive length";
            }
            if (!is_path_of(g, r)) return "rung is not a path";
            total_rung_len += r.length();
            for (VertexId v : r.v)
                if (!all.insert(v).second) return "rungs share vertex " + std::to_string(v);
            for (std::size_t i = 0; i + 1 < r.v.size(); ++i) add_edge(expected, r.v[i], r.v[i + 1]);
        }
    for (int x = 0; x < 4; ++x) {
        std::vector<VertexId> tri;
        for (int y = 0; y < 4; ++y)
            if (y != x) tri.push_back(w.corners[x][y]);
        add_edge(expected, tri[0], tri[1]);
        add_edge(expected, tri[0], tri[2]);
        add_edge(expected, tri[1], tri[2]);
        if (tri[0] == tri[1] || tri[0] == tri[2] || tri[1] == tri[2])
            return "basic triangle with coinciding corners";
    }
    std::vector<VertexId> verts(all.begin(), all.end());
    if (auto err = check_exact_edges(g, verts, expected)) return err;

    if (w.proper != (total_rung_len > 0)) return "proper flag inconsistent with rung lengths";

    // Rebuild the subdivision of K4 and check the recorded bipartite flag:
    // branch vertex x gets id x, rung (x,y) contributes a path of
    // length(rung)+1 edges between x and y.
    int next = 4;
    std::vector<std::pair<int, int>> redges;
    k = 0;
    for (int x = 0; x < 4; ++x)
        for (int y = x + 1; y < 4; ++y, ++k) {
            int prev = x;
            for (int i = 0; i < w.rungs[k].length(); ++i) {
                redges.emplace_back(prev, next);
                prev = next++;
            }
            redges.emplace_back(prev, y);
        }
    Graph r = Graph::from_edges(next, redges);
    std::vector<int> color(r.order(), -1);
    bool bip = true;
    for (int s = 0; s < r.order() && bip; ++s) {
        if (color[s] != -1) continue;
        color[s] = 0;
        std::vector<int> stack{s};
        while (!stack.empty() && bip) {
            int u = stack.back();
            stack.pop_back();
            for (int v = r.neighbors(u).first(); v != -1; v = r.neighbors(u).next(v)) {
                if (color[v] == -1) {
                    color[v] = 1 - color[u];
                    stack.push_back(v);
                } else if (color[v] == color[u]) {
                    bip = false;
                    break;
                }
            }
        }
    }
    if (w.bipartite != bip) return "bipartite flag inconsistent with the rebuilt subdivision";
    return std::nullopt;
}

std::optional<std::string> validate_structure(const Graph& g, const StructureWitness& w) {
    return w.is_prism() ? validate_prism(g, w.prism()) : validate_pyramid(g, w.pyramid());
}

}  // namespace prismatic
