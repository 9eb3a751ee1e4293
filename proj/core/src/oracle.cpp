#include "prismatic/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "prismatic/holes.hpp"
#include "prismatic/parity.hpp"

namespace prismatic {

namespace {

// Follows the unique path out of `start` (already containing `prev` as the
// step before) through degree-2 interiors until a vertex of `stop` is hit.
// Returns false on any irregularity.
bool walk_to(const Graph& g, VertexId prev, VertexId cur, const VertexSet& stop,
             std::vector<VertexId>& out) {
  const int n = g.order();
  for (int guard = 0; guard <= n; ++guard) {
    out.push_back(cur);
    if (stop.test(cur)) return true;
    if (g.degree(cur) != 2) return false;
    VertexSet nb = g.neighbors(cur);
    nb.reset(prev);
    if (nb.count() != 1) return false;
    prev = cur;
    cur = nb.first();
  }
  return false;
}

}  // namespace

std::optional<PrismWitness> is_prism(const Graph& g) {
  const int n = g.order();
  if (n < 6 || g.edge_count() != n + 3) return std::nullopt;
  int deg3 = 0;
  for (VertexId v = 0; v < n; ++v) {
    const int d = g.degree(v);
    if (d == 3)
      ++deg3;
    else if (d != 2)
      return std::nullopt;
  }
  if (deg3 != 6) return std::nullopt;

  const auto tris = triangles(g);
  if (tris.size() != 2) return std::nullopt;
  VertexSet bset;
  for (VertexId v : tris[1].v) bset.set(v);
  for (VertexId v : tris[0].v)
    if (bset.test(v)) return std::nullopt;

  PrismWitness w;
  w.a = tris[0];
  for (int i = 0; i < 3; ++i) {
    const VertexId ai = w.a.v[i];
    VertexSet nb = g.neighbors(ai);
    for (VertexId u : w.a.v) nb.reset(u);
    if (nb.count() != 1) return std::nullopt;
    w.paths[i].v = {ai};
    if (!walk_to(g, ai, nb.first(), bset, w.paths[i].v)) return std::nullopt;
    w.b.v[i] = w.paths[i].back();
  }
  if (w.b.v[0] == w.b.v[1] || w.b.v[0] == w.b.v[2] || w.b.v[1] == w.b.v[2])
    return std::nullopt;
  if (validate_prism(g, w)) return std::nullopt;
  return w;
}

std::optional<PyramidWitness> is_pyramid(const Graph& g) {
  const int n = g.order();
  if (n < 6 || g.edge_count() != n + 2) return std::nullopt;
  int deg3 = 0;
  for (VertexId v = 0; v < n; ++v) {
    const int d = g.degree(v);
    if (d == 3)
      ++deg3;
    else if (d != 2)
      return std::nullopt;
  }
  if (deg3 != 4) return std::nullopt;

  const auto tris = triangles(g);
  if (tris.size() != 1) return std::nullopt;
  PyramidWitness w;
  w.triangle = tris[0];
  VertexSet tset;
  for (VertexId v : w.triangle.v) tset.set(v);
  VertexId apex = -1;
  for (VertexId v = 0; v < n; ++v)
    if (g.degree(v) == 3 && !tset.test(v)) {
      if (apex >= 0) return std::nullopt;
      apex = v;
    }
  if (apex < 0) return std::nullopt;
  w.apex = apex;

  std::array<bool, 3> filled{false, false, false};
  VertexSet starts = g.neighbors(apex);
  for (VertexId s = starts.first(); s >= 0; s = starts.next(s)) {
    std::vector<VertexId> walk{apex};
    if (!walk_to(g, apex, s, tset, walk)) return std::nullopt;
    const VertexId end = walk.back();
    for (int i = 0; i < 3; ++i)
      if (w.triangle.v[i] == end) {
        if (filled[i]) return std::nullopt;
        filled[i] = true;
        w.paths[i].v = std::move(walk);
      }
  }
  if (!filled[0] || !filled[1] || !filled[2]) return std::nullopt;
  if (validate_pyramid(g, w)) return std::nullopt;
  return w;
}

const char* oracle_kind_name(OracleKind k) {
  switch (k) {
    case OracleKind::PrismAny: return "prism";
    case OracleKind::PrismOdd: return "odd-prism";
    case OracleKind::PrismEven: return "even-prism";
    case OracleKind::Pyramid: return "pyramid";
    case OracleKind::LgSubdivK4: return "lg-subdiv-k4";
    case OracleKind::LgProperSubdivK4: return "lg-proper-subdiv-k4";
    case OracleKind::LgBipartiteSubdivK4: return "lg-bipartite-subdiv-k4";
    case OracleKind::OddHole: return "odd-hole";
    case OracleKind::AntiholeGeq5: return "antihole";
  }
  return "?";
}

std::optional<OracleKind> oracle_kind_from_name(const std::string& name) {
  for (OracleKind k :
       {OracleKind::PrismAny, OracleKind::PrismOdd, OracleKind::PrismEven, OracleKind::Pyramid,
        OracleKind::LgSubdivK4, OracleKind::LgProperSubdivK4, OracleKind::LgBipartiteSubdivK4,
        OracleKind::OddHole, OracleKind::AntiholeGeq5})
    if (name == oracle_kind_name(k)) return k;
  return std::nullopt;
}

namespace {

// Remaps a witness found in an induced subgraph back to the host graph.
Path map_path(const Path& p, const std::vector<VertexId>& old_of_new) {
  Path q;
  q.v.reserve(p.v.size());
  for (VertexId v : p.v) q.v.push_back(old_of_new[v]);
  return q;
}

Triangle map_triangle(const Triangle& t, const std::vector<VertexId>& old_of_new) {
  Triangle r;
  for (int i = 0; i < 3; ++i) r.v[i] = old_of_new[t.v[i]];
  return r;
}

// Scans all subsets of size k, then k+1, ... for the first one passing
// `probe`.  `probe` sees the subset as a VertexSet of host-graph ids.
template <typename Probe>
std::optional<OracleWitness> scan_subsets(const Graph& g, int min_size, int extra_edges,
                                          std::uint64_t budget, Probe probe) {
  const int n = g.order();
  std::uint64_t used = 0;
  std::vector<int> idx;
  for (int k = min_size; k <= n; ++k) {
    idx.resize(k);
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
      if (++used > budget) throw BudgetExceeded("oracle subset scan exceeded budget");
      VertexSet s;
      for (int v : idx) s.set(v);
      // Degree sum inside the subset gives the induced edge count; each
      // target family pins it to k + extra_edges exactly.
      int twice_m = 0;
      for (int v : idx) twice_m += (g.neighbors(v) & s).count();
      if (twice_m == 2 * (k + extra_edges)) {
        if (auto w = probe(s)) return w;
      }
      // next combination
      int i = k - 1;
      while (i >= 0 && idx[i] == n - k + i) --i;
      if (i < 0) break;
      ++idx[i];
      for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<OracleWitness> oracle_find(const Graph& g, OracleKind kind,
                                         const OracleOptions& opts) {
  switch (kind) {
    case OracleKind::OddHole: {
      auto h = find_odd_hole_bruteforce(g, opts.budget);
      if (!h) return std::nullopt;
      return OracleWitness{*h};
    }
    case OracleKind::AntiholeGeq5: {
      const Graph comp = complement(g);
      for (int len = 5; len <= g.order(); ++len) {
        auto found = enumerate_chordless_cycles(comp, len, len, opts.budget);
        if (!found.empty()) {
          AntiholeWitness a;
          a.cycle = found.front().cycle;
          return OracleWitness{a};
        }
      }
      return std::nullopt;
    }
    case OracleKind::PrismAny:
    case OracleKind::PrismOdd:
    case OracleKind::PrismEven:
      return scan_subsets(g, 6, 3, opts.budget, [&](const VertexSet& s) -> std::optional<OracleWitness> {
        auto sub = induced_subgraph(g, s);
        auto w = is_prism(sub.graph);
        if (!w) return std::nullopt;
        const Parity p = w->parity();
        if (kind == OracleKind::PrismOdd && p != Parity::Odd) return std::nullopt;
        if (kind == OracleKind::PrismEven && p != Parity::Even) return std::nullopt;
        PrismWitness out;
        out.a = map_triangle(w->a, sub.old_of_new);
        out.b = map_triangle(w->b, sub.old_of_new);
        for (int i = 0; i < 3; ++i) out.paths[i] = map_path(w->paths[i], sub.old_of_new);
        return OracleWitness{out};
      });
    case OracleKind::Pyramid:
      return scan_subsets(g, 6, 2, opts.budget, [&](const VertexSet& s) -> std::optional<OracleWitness> {
        auto sub = induced_subgraph(g, s);
        auto w = is_pyramid(sub.graph);
        if (!w) return std::nullopt;
        PyramidWitness out;
        out.apex = sub.old_of_new[w->apex];
        out.triangle = map_triangle(w->triangle, sub.old_of_new);
        for (int i = 0; i < 3; ++i) out.paths[i] = map_path(w->paths[i], sub.old_of_new);
        return OracleWitness{out};
      });
    case OracleKind::LgSubdivK4:
    case OracleKind::LgProperSubdivK4:
    case OracleKind::LgBipartiteSubdivK4:
      return scan_subsets(g, 6, 6, opts.budget, [&](const VertexSet& s) -> std::optional<OracleWitness> {
        auto w = check_lgk4_structure(g, s);
        if (!w) return std::nullopt;
        if (kind == OracleKind::LgProperSubdivK4 && !w->proper) return std::nullopt;
        if (kind == OracleKind::LgBipartiteSubdivK4 && !w->bipartite) return std::nullopt;
        return OracleWitness{*w};
      });
  }
  return std::nullopt;
}

BuiltLgk4 build_lg_subdivided_k4(const std::array<int, 6>& rung_lengths) {
  static constexpr int kPairs[6][2] = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
  for (int len : rung_lengths)
    if (len < 0) throw std::invalid_argument("negative rung length");

  LGK4Witness w;
  for (auto& row : w.corners) row.fill(-1);
  w.rungs.resize(6);
  std::vector<std::pair<VertexId, VertexId>> edges;
  int next = 0;
  for (int p = 0; p < 6; ++p) {
    const int x = kPairs[p][0], y = kPairs[p][1];
    const int len = rung_lengths[p];
    Path rung;
    if (len == 0) {
      rung.v = {next++};
    } else {
      for (int i = 0; i <= len; ++i) rung.v.push_back(next + i);
      for (int i = 0; i < len; ++i) edges.push_back({next + i, next + i + 1});
      next += len + 1;
    }
    w.corners[x][y] = rung.front();
    w.corners[y][x] = rung.back();
    w.rungs[p] = std::move(rung);
  }
  for (int x = 0; x < 4; ++x) {
    std::vector<VertexId> slot;
    for (int y = 0; y < 4; ++y)
      if (y != x) slot.push_back(w.corners[x][y]);
    edges.push_back({slot[0], slot[1]});
    edges.push_back({slot[0], slot[2]});
    edges.push_back({slot[1], slot[2]});
  }

  int total = 0;
  for (int len : rung_lengths) total += (len == 0 ? 1 : len + 1);
  w.proper = std::accumulate(rung_lengths.begin(), rung_lengths.end(), 0) > 0;
  // The underlying subdivision is bipartite iff every triangle of K4 turns
  // into an even cycle; rung length len means len+1 edges there.
  auto r = [&](int p) { return rung_lengths[p] + 1; };
  w.bipartite = (r(0) + r(1) + r(3)) % 2 == 0 && (r(0) + r(2) + r(4)) % 2 == 0 &&
                (r(1) + r(2) + r(5)) % 2 == 0;

  BuiltLgk4 out{Graph::from_edges(total, edges), std::move(w)};
  if (auto err = validate_lgk4(out.graph, out.witness))
    throw std::logic_error("built line graph failed validation: " + *err);
  return out;
}

namespace {

void clique_expand(const Graph& g, int rsize, VertexSet p, int& best) {
  if (p.none()) {
    best = std::max(best, rsize);
    return;
  }
  if (rsize + p.count() <= best) return;
  for (VertexId v = p.first(); v >= 0; v = p.next(v)) {
    VertexSet rest = p;
    for (VertexId u = p.first(); u != v; u = p.next(u)) rest.reset(u);
    if (rsize + rest.count() <= best) return;
    VertexSet next = rest & g.neighbors(v);
    next.reset(v);
    clique_expand(g, rsize + 1, next, best);
  }
}

bool colorable(const Graph& g, int k, std::vector<int>& color, int at, int used) {
  if (at == g.order()) return true;
  const int limit = std::min(k - 1, used);  // first unused colour only once
  for (int c = 0; c <= limit; ++c) {
    bool ok = true;
    VertexSet nb = g.neighbors(at);
    for (VertexId u = nb.first(); u >= 0 && u < at; u = nb.next(u))
      if (color[u] == c) {
        ok = false;
        break;
      }
    if (!ok) continue;
    color[at] = c;
    if (colorable(g, k, color, at + 1, std::max(used, c + 1))) return true;
  }
  color[at] = -1;
  return false;
}

}  // namespace

int oracle_clique_number(const Graph& g) {
  int best = 0;
  clique_expand(g, 0, VertexSet::universe(g.order()), best);
  return best;
}

int oracle_chromatic_number(const Graph& g) {
  const int n = g.order();
  if (n == 0) return 0;
  for (int k = oracle_clique_number(g); k <= n; ++k) {
    std::vector<int> color(n, -1);
    if (colorable(g, k, color, 0, 0)) return k;
  }
  return n;
}

}  // namespace prismatic
