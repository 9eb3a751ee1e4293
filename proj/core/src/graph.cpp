#include "prismatic/graph.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <sstream>

namespace prismatic {

namespace {

void check_order(int n) {
    if (n < 0) throw std::invalid_argument("graph order must be non-negative");
    if (n > VertexSet::kMaxBits)
        throw std::invalid_argument("graph order " + std::to_string(n) + " exceeds the supported maximum of " +
                                    std::to_string(VertexSet::kMaxBits));
}

}  // namespace

Graph Graph::empty(int n) {
    check_order(n);
    Graph g;
    g.n_ = n;
    g.rows_.assign(n, VertexSet{});
    return g;
}

Graph Graph::from_edges(int n, const std::vector<std::pair<VertexId, VertexId>>& edges) {
    Graph g = empty(n);
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::invalid_argument("edge endpoint out of range: " + std::to_string(u) + " " + std::to_string(v));
        if (u == v) throw std::invalid_argument("loop at vertex " + std::to_string(u));
        if (!g.rows_[u].test(v)) {
            g.rows_[u].set(v);
            g.rows_[v].set(u);
            ++g.m_;
        }
    }
    return g;
}

std::vector<std::pair<VertexId, VertexId>> Graph::edges() const {
    std::vector<std::pair<VertexId, VertexId>> out;
    out.reserve(m_);
    for (int u = 0; u < n_; ++u)
        for (int v = rows_[u].next(u); v != -1; v = rows_[u].next(v)) out.emplace_back(u, v);
    return out;
}

Graph parse_graph6(const std::string& line) {
    // Strip one trailing newline / surrounding whitespace.
    std::size_t begin = 0, end = line.size();
    while (begin < end && std::isspace(static_cast<unsigned char>(line[begin]))) ++begin;
    while (end > begin && std::isspace(static_cast<unsigned char>(line[end - 1]))) --end;
    if (begin == end) throw ParseError("empty graph6 input", 0);

    unsigned char h = line[begin];
    if (h == 126) throw ParseError("graph6 long form (order > 62) is not supported", begin);
    if (h < 63 || h > 125) throw ParseError("invalid graph6 header byte", begin);
    int n = h - 63;

    std::size_t nbits = static_cast<std::size_t>(n) * (n - 1) / 2;
    std::size_t nbytes = (nbits + 5) / 6;
    if (end - begin - 1 < nbytes)
        throw ParseError("graph6 payload truncated: expected " + std::to_string(nbytes) + " bytes", end);
    if (end - begin - 1 > nbytes)
        throw ParseError("unexpected bytes after graph6 payload", begin + 1 + nbytes);

    std::vector<std::pair<VertexId, VertexId>> edges;
    std::size_t bit = 0;
    for (int col = 1; col < n; ++col) {
        for (int row = 0; row < col; ++row, ++bit) {
            std::size_t at = begin + 1 + bit / 6;
            unsigned char c = line[at];
            // full 6-bit alphabet 63..126; only the header reserves 126
            if (c < 63 || c > 126) throw ParseError("invalid graph6 payload byte", at);
            int shift = 5 - static_cast<int>(bit % 6);
            if (((c - 63) >> shift) & 1) edges.emplace_back(row, col);
        }
    }
    return Graph::from_edges(n, edges);
}

std::string encode_graph6(const Graph& g) {
    int n = g.order();
    if (n > 62) throw std::invalid_argument("graph6 short form requires order <= 62");
    std::string out;
    out.push_back(static_cast<char>(n + 63));
    int acc = 0, nb = 0;
    for (int col = 1; col < n; ++col) {
        for (int row = 0; row < col; ++row) {
            acc = (acc << 1) | (g.adjacent(row, col) ? 1 : 0);
            if (++nb == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = 0;
                nb = 0;
            }
        }
    }
    if (nb > 0) out.push_back(static_cast<char>((acc << (6 - nb)) + 63));
    return out;
}

Graph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    long long n, m;
    if (!(in >> n >> m)) throw ParseError("edge list must start with \"n m\"", 0);
    if (n < 0 || n > VertexSet::kMaxBits) throw ParseError("vertex count out of range", 0);
    if (m < 0) throw ParseError("negative edge count", 0);
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (long long i = 0; i < m; ++i) {
        long long u, v;
        if (!(in >> u >> v))
            throw ParseError("expected " + std::to_string(m) + " edges, got " + std::to_string(i),
                             static_cast<std::size_t>(in.tellg() == -1 ? (long long)text.size() : (long long)in.tellg()));
        if (u == v) throw ParseError("loop at vertex " + std::to_string(u));
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw ParseError("edge " + std::to_string(u) + " " + std::to_string(v) + " out of range");
        edges.emplace_back(static_cast<VertexId>(u), static_cast<VertexId>(v));
    }
    std::string rest;
    if (in >> rest) throw ParseError("unexpected trailing tokens in edge list");
    return Graph::from_edges(static_cast<int>(n), edges);
}

std::string format_edge_list(const Graph& g) {
    std::ostringstream out;
    out << g.order() << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
    return out.str();
}

Graph complement(const Graph& g) {
    int n = g.order();
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!g.adjacent(u, v)) edges.emplace_back(u, v);
    return Graph::from_edges(n, edges);
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& keep) {
    InducedSubgraph out;
    out.new_of_old.assign(g.order(), -1);
    for (int v = keep.first(); v != -1; v = keep.next(v)) {
        if (v >= g.order()) throw std::invalid_argument("induced_subgraph: vertex out of range");
        out.new_of_old[v] = static_cast<int>(out.old_of_new.size());
        out.old_of_new.push_back(v);
    }
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (std::size_t i = 0; i < out.old_of_new.size(); ++i) {
        VertexSet nb = g.neighbors(out.old_of_new[i]) & keep;
        for (int v = nb.next(out.old_of_new[i]); v != -1; v = nb.next(v))
            edges.emplace_back(static_cast<int>(i), out.new_of_old[v]);
    }
    out.graph = Graph::from_edges(static_cast<int>(out.old_of_new.size()), edges);
    return out;
}

std::vector<std::vector<VertexId>> connected_components(const Graph& g, const VertexSet& within) {
    std::vector<std::vector<VertexId>> comps;
    VertexSet todo = within;
    for (int s = todo.first(); s != -1; s = todo.first()) {
        std::vector<VertexId> comp;
        std::deque<VertexId> queue{s};
        todo.reset(s);
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            comp.push_back(u);
            VertexSet nb = g.neighbors(u) & todo;
            for (int v = nb.first(); v != -1; v = nb.next(v)) {
                todo.reset(v);
                queue.push_back(v);
            }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

std::vector<std::vector<VertexId>> connected_components(const Graph& g) {
    return connected_components(g, g.vertices());
}

std::optional<Path> shortest_path_constrained(const Graph& g, VertexId src, VertexId dst,
                                              const VertexSet& allowed_interior) {
    if (src < 0 || src >= g.order() || dst < 0 || dst >= g.order())
        throw std::invalid_argument("shortest_path_constrained: endpoint out of range");
    if (src == dst) return Path{{src}};
    if (g.adjacent(src, dst)) return Path{{src, dst}};

    std::vector<VertexId> parent(g.order(), -1);
    std::deque<VertexId> queue{src};
    VertexSet seen;
    seen.set(src);
    VertexSet allowed = allowed_interior;
    allowed.set(dst);
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        VertexSet nb = (g.neighbors(u) & allowed) - seen;
        for (int v = nb.first(); v != -1; v = nb.next(v)) {
            parent[v] = u;
            if (v == dst) {
                Path p;
                for (int w = dst; w != -1; w = parent[w]) p.v.push_back(w);
                std::reverse(p.v.begin(), p.v.end());
                return p;
            }
            seen.set(v);
            queue.push_back(v);
        }
    }
    return std::nullopt;
}

std::vector<Triangle> triangles(const Graph& g) {
    std::vector<Triangle> out;
    for (int u = 0; u < g.order(); ++u) {
        const VertexSet& nu = g.neighbors(u);
        for (int v = nu.next(u); v != -1; v = nu.next(v)) {
            VertexSet common = nu & g.neighbors(v);
            for (int w = common.next(v); w != -1; w = common.next(w)) out.push_back(Triangle{{u, v, w}});
        }
    }
    return out;
}

Contraction contract(const Graph& g, VertexId x, VertexId y) {
    if (x < 0 || x >= g.order() || y < 0 || y >= g.order() || x == y)
        throw std::invalid_argument("contract: invalid vertex pair");
    if (g.adjacent(x, y)) throw std::invalid_argument("contract: pair is adjacent");

    Contraction out;
    out.new_of_old.assign(g.order(), -1);
    for (int v = 0; v < g.order(); ++v) {
        if (v == x || v == y) continue;
        out.new_of_old[v] = static_cast<int>(out.old_of_new.size());
        out.old_of_new.push_back(v);
    }
    out.merged = static_cast<int>(out.old_of_new.size());
    out.old_of_new.push_back(-1);
    out.new_of_old[x] = out.merged;
    out.new_of_old[y] = out.merged;

    std::vector<std::pair<VertexId, VertexId>> edges;
    for (auto [u, v] : g.edges()) edges.emplace_back(out.new_of_old[u], out.new_of_old[v]);
    out.graph = Graph::from_edges(g.order() - 1, edges);
    return out;
}

bool is_clique(const Graph& g, const VertexSet& s) {
    for (int u = s.first(); u != -1; u = s.next(u)) {
        VertexSet rest = s;
        rest.reset(u);
        if (!rest.is_subset_of(g.neighbors(u))) return false;
    }
    return true;
}

bool is_path_of(const Graph& g, const Path& p) {
    if (p.v.empty()) return false;
    VertexSet seen;
    for (std::size_t i = 0; i < p.v.size(); ++i) {
        int u = p.v[i];
        if (u < 0 || u >= g.order() || seen.test(u)) return false;
        seen.set(u);
        if (i > 0 && !g.adjacent(p.v[i - 1], u)) return false;
    }
    return true;
}

bool is_chordless_path_of(const Graph& g, const Path& p) {
    if (!is_path_of(g, p)) return false;
    for (std::size_t i = 0; i + 2 < p.v.size(); ++i)
        for (std::size_t j = i + 2; j < p.v.size(); ++j)
            if (g.adjacent(p.v[i], p.v[j])) return false;
    return true;
}

bool is_chordless_cycle_of(const Graph& g, const std::vector<VertexId>& cycle) {
    std::size_t k = cycle.size();
    if (k < 4) return false;
    VertexSet seen;
    for (int u : cycle) {
        if (u < 0 || u >= g.order() || seen.test(u)) return false;
        seen.set(u);
    }
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i + 1; j < k; ++j) {
            bool consecutive = (j == i + 1) || (i == 0 && j == k - 1);
            if (g.adjacent(cycle[i], cycle[j]) != consecutive) return false;
        }
    return true;
}

}  // namespace prismatic
