#include "prismatic/coloring.hpp"

#include <algorithm>
#include <stdexcept>

#include "prismatic/holes.hpp"
#include "prismatic/recognize.hpp"

namespace prismatic {

namespace {

void require_nonadjacent_pair(const Graph& g, VertexId x, VertexId y) {
  if (x < 0 || y < 0 || x >= g.order() || y >= g.order() || x == y)
    throw std::invalid_argument("even-pair test needs two distinct vertices of the graph");
  if (g.adjacent(x, y)) throw std::invalid_argument("even-pair test needs a non-adjacent pair");
}

// DFS over chordless x-y paths; returns false as soon as an odd one appears.
bool all_paths_even(const Graph& g, VertexId x, VertexId y, std::uint64_t budget) {
  std::uint64_t used = 0;
  // forbid = path vertices plus neighbours of every path vertex but the last
  auto rec = [&](auto&& self, VertexId last, const VertexSet& forbid, int edges) -> bool {
    if (++used > budget) throw BudgetExceeded("even-pair path enumeration budget exhausted");
    VertexSet cand = g.neighbors(last) - forbid;
    if (cand.test(y)) {
      if ((edges + 1) % 2 != 0) return false;
      cand.reset(y);
    }
    for (VertexId v = cand.first(); v >= 0; v = cand.next(v)) {
      VertexSet next_forbid = forbid | g.neighbors(last);
      next_forbid.set(v);
      if (!self(self, v, next_forbid, edges + 1)) return false;
    }
    return true;
  };
  return rec(rec, x, VertexSet::of({x}), 0);
}

}  // namespace

bool is_even_pair_definitional(const Graph& g, VertexId x, VertexId y, std::uint64_t budget) {
  require_nonadjacent_pair(g, x, y);
  return all_paths_even(g, x, y, budget);
}

bool is_even_pair_via_berge(const Graph& g, VertexId x, VertexId y, PrecondMode mode,
                            std::uint64_t budget) {
  require_nonadjacent_pair(g, x, y);
  DetectOptions opts;
  opts.mode = mode;
  if (precondition_check_enabled(g, opts)) {
    auto cert = is_berge_desk(g, budget);
    if (!cert.berge)
      throw PreconditionViolation("even-pair-via-Berge needs a Berge input graph",
                                  cert.odd_hole ? "odd hole present" : "odd antihole present");
  }
  const int n = g.order();
  auto edges = g.edges();
  edges.emplace_back(x, n);
  edges.emplace_back(y, n);
  Graph aug = Graph::from_edges(n + 1, edges);
  return is_berge_desk(aug, budget).berge;
}

Coloring color_class_a(const Graph& g, std::uint64_t budget) {
  auto rep = recognize_class_a(g, budget);
  if (!rep.member)
    throw PreconditionViolation("coloring requires a recognized class-A member",
                                "rejected at stage " + rep.stage_name + " with certificate " +
                                    rep.certificate_kind());

  const int n = g.order();
  Graph cur = g;
  std::vector<std::vector<VertexId>> groups(n);
  for (VertexId v = 0; v < n; ++v) groups[v] = {v};

  Coloring out;
  while (!is_clique(cur, VertexSet::universe(cur.order()))) {
    bool contracted = false;
    for (VertexId x = 0; x < cur.order() && !contracted; ++x)
      for (VertexId y = x + 1; y < cur.order() && !contracted; ++y) {
        if (cur.adjacent(x, y)) continue;
        // Membership of the contraction alone is not enough: a pair with an
        // odd chordless path can still contract into a member (path 0-2-3-1:
        // merging 0,1 makes a triangle), and that merge inflates the clique
        // number, losing palette optimality.  So insist on an even pair whose
        // contraction stays in the class; every non-complete member has one,
        // which is what makes this loop terminate at a clique.
        if (!is_even_pair_definitional(cur, x, y, budget)) continue;
        auto c = contract(cur, x, y);
        if (!recognize_class_a(c.graph, budget).member) continue;
        out.trace.push_back({groups[x], groups[y]});
        std::vector<std::vector<VertexId>> merged(c.graph.order());
        for (VertexId ov = 0; ov < cur.order(); ++ov) {
          auto& dst = merged[c.new_of_old[ov]];
          dst.insert(dst.end(), groups[ov].begin(), groups[ov].end());
        }
        for (auto& grp : merged) std::sort(grp.begin(), grp.end());
        groups = std::move(merged);
        cur = c.graph;
        contracted = true;
      }
    if (!contracted)
      throw std::logic_error("no contraction keeps the graph in the class; "
                             "this contradicts the even-pair guarantee for members");
  }

  out.palette = cur.order();
  out.color.assign(n, -1);
  for (VertexId nv = 0; nv < cur.order(); ++nv)
    for (VertexId orig : groups[nv]) out.color[orig] = nv;
  return out;
}

}  // namespace prismatic
