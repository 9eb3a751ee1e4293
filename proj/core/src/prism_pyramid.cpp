#include "prismatic/prism_pyramid.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

#include "prismatic/oracle.hpp"

namespace prismatic {

namespace {

VertexSet path_bits(const Path& p) {
  VertexSet s;
  for (VertexId v : p.v) s.set(v);
  return s;
}

Path map_path(const Path& p, const std::vector<VertexId>& old_of_new) {
  Path q;
  q.v.reserve(p.v.size());
  for (VertexId v : p.v) q.v.push_back(old_of_new[v]);
  return q;
}

// Does `s` induce a pyramid or a prism?  Witness in host ids.
std::optional<StructureWitness> structure_from_subset(const Graph& g, const VertexSet& s) {
  auto sub = induced_subgraph(g, s);
  if (auto py = is_pyramid(sub.graph)) {
    PyramidWitness w;
    w.apex = sub.old_of_new[py->apex];
    for (int i = 0; i < 3; ++i) {
      w.triangle.v[i] = sub.old_of_new[py->triangle.v[i]];
      w.paths[i] = map_path(py->paths[i], sub.old_of_new);
    }
    StructureWitness out;
    out.w = w;
    return out;
  }
  if (auto pr = is_prism(sub.graph)) {
    PrismWitness w;
    for (int i = 0; i < 3; ++i) {
      w.a.v[i] = sub.old_of_new[pr->a.v[i]];
      w.b.v[i] = sub.old_of_new[pr->b.v[i]];
      w.paths[i] = map_path(pr->paths[i], sub.old_of_new);
    }
    StructureWitness out;
    out.w = w;
    return out;
  }
  return std::nullopt;
}

// One quadruple of Algorithm-style routing: three shortest paths a→b_i whose
// interiors avoid the other two triangle vertices' neighbourhoods (and the
// quadruple itself), then an exact structural check of the union.
std::optional<StructureWitness> try_quadruple(const Graph& g, VertexId a, const Triangle& t) {
  const int n = g.order();
  VertexSet u;
  for (int i = 0; i < 3; ++i) {
    VertexSet allowed = VertexSet::universe(n);
    allowed -= g.neighbors(t.v[(i + 1) % 3]);
    allowed -= g.neighbors(t.v[(i + 2) % 3]);
    allowed.reset(a);
    for (VertexId b : t.v) allowed.reset(b);
    auto p = shortest_path_constrained(g, a, t.v[i], allowed);
    if (!p) return std::nullopt;
    u |= path_bits(*p);
  }
  return structure_from_subset(g, u);
}

}  // namespace

std::optional<StructureWitness> detect_pyramid_or_prism_v1(const Graph& g) {
  const int n = g.order();
  const auto tris = triangles(g);
  for (VertexId a = 0; a < n; ++a) {
    for (const Triangle& t : tris) {
      if (a == t.v[0] || a == t.v[1] || a == t.v[2]) continue;
      int adj = 0;
      for (VertexId b : t.v) adj += g.adjacent(a, b) ? 1 : 0;
      if (adj > 1) continue;
      if (auto w = try_quadruple(g, a, t)) return w;
    }
  }
  return std::nullopt;
}

V2Result detect_pyramid_or_prism_v2(const Graph& g, bool want_witness) {
  const int n = g.order();
  const auto tris = triangles(g);
  V2Result res;

  for (const Triangle& t : tris) {
    std::array<VertexSet, 3> x;
    for (int i = 0; i < 3; ++i) {
      x[i] = g.neighbors(t.v[i]);
      x[i] -= g.neighbors(t.v[(i + 1) % 3]);
      x[i] -= g.neighbors(t.v[(i + 2) % 3]);
    }
    // Step 1: a vertex of one attachment set adjacent into both others.
    for (int i = 0; i < 3 && !res.found; ++i)
      for (VertexId v = x[i].first(); v >= 0; v = x[i].next(v))
        if (g.neighbors(v).intersects(x[(i + 1) % 3]) &&
            g.neighbors(v).intersects(x[(i + 2) % 3])) {
          res.found = true;
          res.stage = "step1";
          res.triangle = t;
          break;
        }
    if (res.found) break;

    // Step 3: a component of the far set sees all three attachment sets.
    VertexSet far = VertexSet::universe(n);
    for (VertexId b : t.v) far -= g.neighbors(b);
    for (const auto& comp : connected_components(g, far)) {
      bool lab[3] = {false, false, false};
      for (VertexId v : comp)
        for (int i = 0; i < 3; ++i)
          if (!lab[i] && g.neighbors(v).intersects(x[i])) lab[i] = true;
      if (lab[0] && lab[1] && lab[2]) {
        res.found = true;
        res.stage = "step3";
        res.triangle = t;
        break;
      }
    }
    if (res.found) break;
  }

  // The set tests provably miss pyramids whose apex touches the triangle
  // (a length-1 arm) unless both other arms have length 2.  Route those the
  // quadruple way, restricted to apexes with exactly one triangle neighbour.
  if (!res.found) {
    for (VertexId a = 0; a < n && !res.found; ++a)
      for (const Triangle& t : tris) {
        if (a == t.v[0] || a == t.v[1] || a == t.v[2]) continue;
        int adj = 0;
        for (VertexId b : t.v) adj += g.adjacent(a, b) ? 1 : 0;
        if (adj != 1) continue;
        if (try_quadruple(g, a, t)) {
          res.found = true;
          res.stage = "fallback";
          res.triangle = t;
          break;
        }
      }
  }

  if (res.found && want_witness) {
    res.witness = detect_pyramid_or_prism_v1(g);
    if (!res.witness)
      throw std::logic_error("set-based detector fired but the quadruple scan found nothing");
  }
  return res;
}

namespace {

// Multi-source BFS; seeds pushed ascending, neighbours scanned ascending, so
// the first stopping vertex and its parent chain are deterministic.  Returns
// the chain [stop-vertex, ..., seed].
template <typename Stop>
std::optional<std::vector<VertexId>> bfs_to(const Graph& g, const VertexSet& sources, Stop stop) {
  std::vector<int> parent(g.order(), -1);
  std::deque<VertexId> q;
  for (VertexId s = sources.first(); s >= 0; s = sources.next(s)) {
    parent[s] = -2;
    q.push_back(s);
  }
  while (!q.empty()) {
    const VertexId u = q.front();
    q.pop_front();
    if (stop(u)) {
      std::vector<VertexId> chain{u};
      while (parent[chain.back()] >= 0) chain.push_back(parent[chain.back()]);
      return chain;
    }
    VertexSet nb = g.neighbors(u);
    for (VertexId v = nb.first(); v >= 0; v = nb.next(v))
      if (parent[v] == -1) {
        parent[v] = u;
        q.push_back(v);
      }
  }
  return std::nullopt;
}

std::optional<std::array<int, 3>> find_path_roles(const VertexSet& v1, const VertexSet& v2,
                                                  const VertexSet& v3, const Path& f) {
  const VertexSet* sets[3] = {&v1, &v2, &v3};
  static constexpr int kPerm[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                                      {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  for (const auto& r : kPerm) {
    if (!sets[r[0]]->test(f.front()) || !sets[r[2]]->test(f.back())) continue;
    bool mid = false;
    for (VertexId v : f.v) mid |= sets[r[1]]->test(v);
    if (!mid) continue;
    bool clean = true;
    for (std::size_t k = 1; k + 1 < f.v.size(); ++k)
      if (sets[r[0]]->test(f.v[k]) || sets[r[2]]->test(f.v[k])) clean = false;
    if (!clean) continue;
    return std::array<int, 3>{r[0], r[1], r[2]};
  }
  return std::nullopt;
}

[[noreturn]] void construction_failed(const std::string& why) {
  throw std::logic_error("three exits construction failed: " + why);
}

ThreeExitsOutcome checked(const Graph& h, const VertexSet& v1, const VertexSet& v2,
                          const VertexSet& v3, ThreeExitsOutcome out) {
  if (auto err = validate_three_exits(h, v1, v2, v3, out)) construction_failed(*err);
  return out;
}

ThreeExitsOutcome path_outcome(const Graph& h, const VertexSet& v1, const VertexSet& v2,
                               const VertexSet& v3, Path f) {
  auto roles = find_path_roles(v1, v2, v3, f);
  if (!roles) construction_failed("no role assignment fits the assembled path");
  return checked(h, v1, v2, v3, ThreeExitsPath{std::move(f), *roles});
}

}  // namespace

ThreeExitsOutcome three_exits(const Graph& h, const VertexSet& v1, const VertexSet& v2,
                              const VertexSet& v3) {
  const int n = h.order();
  if (v1.none() || v2.none() || v3.none())
    throw std::invalid_argument("three exits needs three non-empty sets");
  const VertexSet uni = VertexSet::universe(n);
  if ((v1 - uni).any() || (v2 - uni).any() || (v3 - uni).any())
    throw std::invalid_argument("set vertex out of range");
  if (connected_components(h).size() != 1)
    throw std::invalid_argument("three exits needs a connected graph");

  auto pp = bfs_to(h, v1, [&](VertexId u) { return v3.test(u); });
  if (!pp) construction_failed("no path between the first and third set");
  std::vector<VertexId> p(pp->rbegin(), pp->rend());  // first-set end ... third-set end
  const int plen = static_cast<int>(p.size());

  bool p_meets_v2 = false;
  for (VertexId u : p) p_meets_v2 |= v2.test(u);
  if (p_meets_v2) {
    Path f;
    f.v = p;
    return path_outcome(h, v1, v2, v3, std::move(f));
  }

  VertexSet pbits;
  for (VertexId u : p) pbits.set(u);
  auto qq = bfs_to(h, v2, [&](VertexId u) { return h.neighbors(u).intersects(pbits); });
  if (!qq) construction_failed("no attachment from the second set");
  const std::vector<VertexId>& q = *qq;  // attachment vertex ... second-set seed
  const VertexId v = q.front();

  bool has1 = false, has3 = false;
  for (VertexId u : q) {
    has1 |= v1.test(u);
    has3 |= v3.test(u);
  }

  if (has1 && has3) {
    // A window of the attachment path already touches all three sets.
    for (int len = 0; len < static_cast<int>(q.size()); ++len)
      for (int i = 0; i + len < static_cast<int>(q.size()); ++i) {
        bool c1 = false, c2 = false, c3 = false;
        for (int k = i; k <= i + len; ++k) {
          c1 |= v1.test(q[k]);
          c2 |= v2.test(q[k]);
          c3 |= v3.test(q[k]);
        }
        if (!(c1 && c2 && c3)) continue;
        Path f;
        f.v.assign(q.begin() + i, q.begin() + i + len + 1);
        if (auto roles = find_path_roles(v1, v2, v3, f))
          return checked(h, v1, v2, v3, ThreeExitsPath{std::move(f), *roles});
      }
    construction_failed("no window of the attachment path validates");
  }

  int iw = -1, ix = -1;
  for (int k = 0; k < plen; ++k)
    if (h.adjacent(v, p[k])) {
      if (iw < 0) iw = k;
      ix = k;
    }
  if (iw < 0) construction_failed("attachment vertex lost its neighbours");

  if (has1 || has3) {
    // Walk the far end of the spine to the attachment, then out the side path.
    Path f;
    if (has1) {
      for (int k = plen - 1; k >= ix; --k) f.v.push_back(p[k]);
    } else {
      for (int k = 0; k <= iw; ++k) f.v.push_back(p[k]);
    }
    f.v.insert(f.v.end(), q.begin(), q.end());
    return path_outcome(h, v1, v2, v3, std::move(f));
  }

  if (iw == ix) {
    if (iw == 0 || iw == plen - 1) {
      // Attachment at a spine end: everything lines up into one path.
      Path f;
      if (iw == 0)
        for (int k = plen - 1; k >= 0; --k) f.v.push_back(p[k]);
      else
        for (int k = 0; k < plen; ++k) f.v.push_back(p[k]);
      f.v.insert(f.v.end(), q.begin(), q.end());
      return path_outcome(h, v1, v2, v3, std::move(f));
    }
    ThreeExitsTripod t;
    t.center = p[iw];
    for (int k = iw; k >= 0; --k) t.legs[0].v.push_back(p[k]);
    t.legs[1].v.push_back(p[iw]);
    t.legs[1].v.insert(t.legs[1].v.end(), q.begin(), q.end());
    for (int k = iw; k < plen; ++k) t.legs[2].v.push_back(p[k]);
    return checked(h, v1, v2, v3, t);
  }

  if (!h.adjacent(p[iw], p[ix])) {
    if (q.size() == 1) {
      // The second-set vertex itself bridges two spine vertices.
      Path f;
      for (int k = 0; k <= iw; ++k) f.v.push_back(p[k]);
      f.v.push_back(v);
      for (int k = ix; k < plen; ++k) f.v.push_back(p[k]);
      return path_outcome(h, v1, v2, v3, std::move(f));
    }
    ThreeExitsTripod t;
    t.center = v;
    t.legs[0].v.push_back(v);
    for (int k = iw; k >= 0; --k) t.legs[0].v.push_back(p[k]);
    t.legs[1].v = q;
    t.legs[2].v.push_back(v);
    for (int k = ix; k < plen; ++k) t.legs[2].v.push_back(p[k]);
    return checked(h, v1, v2, v3, t);
  }

  ThreeExitsTriangleTripod tt;
  tt.centers = {p[iw], v, p[ix]};
  for (int k = iw; k >= 0; --k) tt.legs[0].v.push_back(p[k]);
  tt.legs[1].v = q;
  for (int k = ix; k < plen; ++k) tt.legs[2].v.push_back(p[k]);
  return checked(h, v1, v2, v3, tt);
}

namespace {

std::optional<std::string> check_path_shape(const Graph& h, const VertexSet& v1,
                                            const VertexSet& v2, const VertexSet& v3,
                                            const ThreeExitsPath& o) {
  const VertexSet* sets[3] = {&v1, &v2, &v3};
  std::array<bool, 3> seen{false, false, false};
  for (int r : o.roles) {
    if (r < 0 || r > 2 || seen[r]) return "roles are not a permutation";
    seen[r] = true;
  }
  if (o.f.v.empty()) return "empty path";
  if (!is_chordless_path_of(h, o.f)) return "not a chordless path";
  if (!sets[o.roles[0]]->test(o.f.front())) return "front end misses its role set";
  if (!sets[o.roles[2]]->test(o.f.back())) return "back end misses its role set";
  bool mid = false;
  for (VertexId u : o.f.v) mid |= sets[o.roles[1]]->test(u);
  if (!mid) return "middle role set not met";
  for (std::size_t k = 1; k + 1 < o.f.v.size(); ++k)
    if (sets[o.roles[0]]->test(o.f.v[k]) || sets[o.roles[2]]->test(o.f.v[k]))
      return "interior vertex lies in an end role set";
  return std::nullopt;
}

std::optional<std::string> check_tripod_shape(const Graph& h, const VertexSet& v1,
                                              const VertexSet& v2, const VertexSet& v3,
                                              const ThreeExitsTripod& o) {
  const VertexSet* sets[3] = {&v1, &v2, &v3};
  for (int i = 0; i < 3; ++i) {
    const Path& leg = o.legs[i];
    if (leg.v.empty() || leg.front() != o.center) return "leg does not start at the center";
    if (leg.length() < 1) return "tripod leg of length 0";
    if (!sets[i]->test(leg.back())) return "leg ends outside its set";
    if (!is_chordless_path_of(h, leg)) return "leg is not a chordless path";
  }
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) {
      for (VertexId u : o.legs[i].v) {
        if (u == o.center) continue;
        for (VertexId w : o.legs[j].v) {
          if (w == o.center) continue;
          if (u == w) return "legs share a vertex besides the center";
          if (h.adjacent(u, w)) return "edge between legs away from the center";
        }
      }
    }
  VertexSet ends;
  for (int i = 0; i < 3; ++i) ends.set(o.legs[i].back());
  for (int i = 0; i < 3; ++i)
    for (VertexId u : o.legs[i].v)
      if (!ends.test(u) && (v1.test(u) || v2.test(u) || v3.test(u)))
        return "non-end vertex lies in a set";
  return std::nullopt;
}

std::optional<std::string> check_triangle_tripod_shape(const Graph& h, const VertexSet& v1,
                                                       const VertexSet& v2, const VertexSet& v3,
                                                       const ThreeExitsTriangleTripod& o) {
  const VertexSet* sets[3] = {&v1, &v2, &v3};
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) {
      if (o.centers[i] == o.centers[j]) return "coinciding centers";
      if (!h.adjacent(o.centers[i], o.centers[j])) return "centers do not form a triangle";
    }
  for (int i = 0; i < 3; ++i) {
    const Path& leg = o.legs[i];
    if (leg.v.empty() || leg.front() != o.centers[i]) return "leg does not start at its center";
    if (!sets[i]->test(leg.back())) return "leg ends outside its set";
    if (!is_chordless_path_of(h, leg)) return "leg is not a chordless path";
  }
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      for (VertexId u : o.legs[i].v)
        for (VertexId w : o.legs[j].v) {
          if (u == w) return "legs share a vertex";
          if (h.adjacent(u, w) && !(u == o.centers[i] && w == o.centers[j]))
            return "edge between legs besides the triangle";
        }
  VertexSet ends;
  for (int i = 0; i < 3; ++i) ends.set(o.legs[i].back());
  for (int i = 0; i < 3; ++i)
    for (VertexId u : o.legs[i].v)
      if (!ends.test(u) && (v1.test(u) || v2.test(u) || v3.test(u)))
        return "non-end vertex lies in a set";
  return std::nullopt;
}

}  // namespace

std::optional<std::string> validate_three_exits(const Graph& h, const VertexSet& v1,
                                                const VertexSet& v2, const VertexSet& v3,
                                                const ThreeExitsOutcome& outcome) {
  if (const auto* o = std::get_if<ThreeExitsPath>(&outcome))
    return check_path_shape(h, v1, v2, v3, *o);
  if (const auto* o = std::get_if<ThreeExitsTripod>(&outcome))
    return check_tripod_shape(h, v1, v2, v3, *o);
  return check_triangle_tripod_shape(h, v1, v2, v3,
                                     std::get<ThreeExitsTriangleTripod>(outcome));
}

}  // namespace prismatic
