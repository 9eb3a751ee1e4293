#include "prismatic/holes.hpp"

#include <algorithm>
#include <stdexcept>

namespace prismatic {

namespace {

// Bits 0..k-1 set.
VertexSet low_mask(int k) {
  VertexSet s;
  for (int i = 0; i < k; ++i) s.set(i);
  return s;
}

struct CycleEnumerator {
  const Graph& g;
  int min_len;
  int max_len;
  std::uint64_t budget;
  std::uint64_t used = 0;
  std::vector<VertexId> path;
  std::vector<HoleWitness> out;

  void tick() {
    if (++used > budget)
      throw BudgetExceeded("chordless cycle enumeration exceeded node budget");
  }

  // path holds [s, v1, ..., last]; blocked holds every vertex that may not
  // become the next interior vertex: ids <= s, the path itself, and all
  // neighbours of interior vertices before last (those would create chords).
  void extend(const VertexSet& blocked) {
    const VertexId s = path.front();
    const VertexId last = path.back();
    VertexSet cand = g.neighbors(last);
    cand -= blocked;
    for (VertexId y = cand.first(); y >= 0; y = cand.next(y)) {
      tick();
      if (g.adjacent(s, y)) {
        // Closing edge. Record once per orientation: second vertex smaller
        // than the last one.
        const int len = static_cast<int>(path.size()) + 1;
        if (len >= min_len && len <= max_len && y > path[1]) {
          HoleWitness h;
          h.cycle = path;
          h.cycle.push_back(y);
          out.push_back(std::move(h));
        }
        continue;  // a neighbour of s can never be interior
      }
      if (static_cast<int>(path.size()) + 2 > max_len) continue;
      VertexSet next_blocked = blocked;
      next_blocked |= g.neighbors(last);
      next_blocked.set(y);
      path.push_back(y);
      extend(next_blocked);
      path.pop_back();
    }
  }

  void run() {
    const int n = g.order();
    for (VertexId s = 0; s < n; ++s) {
      const VertexSet base = low_mask(s + 1);
      VertexSet firsts = g.neighbors(s);
      firsts -= base;
      for (VertexId v1 = firsts.first(); v1 >= 0; v1 = firsts.next(v1)) {
        tick();
        path.assign({s, v1});
        VertexSet blocked = base;
        blocked.set(v1);
        extend(blocked);
      }
    }
    std::sort(out.begin(), out.end(),
              [](const HoleWitness& a, const HoleWitness& b) { return a.cycle < b.cycle; });
  }
};

}  // namespace

std::vector<HoleWitness> enumerate_chordless_cycles(const Graph& g, int min_len, int max_len,
                                                    std::uint64_t budget) {
  if (max_len < min_len) return {};
  CycleEnumerator e{g, std::max(min_len, 3), max_len, budget};
  e.run();
  return std::move(e.out);
}

std::optional<HoleWitness> find_odd_hole_bruteforce(const Graph& g, std::uint64_t budget) {
  for (int len = 5; len <= g.order(); len += 2) {
    auto found = enumerate_chordless_cycles(g, len, len, budget);
    if (!found.empty()) return found.front();
  }
  return std::nullopt;
}

std::optional<HoleWitness> find_long_hole(const Graph& g) {
  const int n = g.order();
  for (VertexId a = 0; a < n; ++a) {
    for (VertexId b = 0; b < n; ++b) {
      if (b == a || !g.adjacent(a, b)) continue;
      for (VertexId c = 0; c < n; ++c) {
        if (c == a || c == b) continue;
        if (!g.adjacent(b, c) || g.adjacent(a, c)) continue;
        // Delete common neighbours of a,c and neighbours of b other than a,c;
        // a long hole through the path a-b-c survives this deletion.
        VertexSet allowed = VertexSet::universe(n);
        allowed -= g.neighbors(a) & g.neighbors(c);
        VertexSet nb = g.neighbors(b);
        nb.reset(a);
        nb.reset(c);
        allowed -= nb;
        auto p = shortest_path_constrained(g, a, c, allowed);
        if (!p) continue;
        HoleWitness h;
        h.cycle = p->v;
        h.cycle.push_back(b);
        if (!is_chordless_cycle_of(g, h.cycle) || h.length() < 5)
          throw std::logic_error("long hole reconstruction produced an invalid cycle");
        return h;
      }
    }
  }
  return std::nullopt;
}

std::optional<AntiholeWitness> find_long_antihole(const Graph& g) {
  auto h = find_long_hole(complement(g));
  if (!h) return std::nullopt;
  AntiholeWitness a;
  a.cycle = h->cycle;
  return a;
}

BergeCertificate is_berge_desk(const Graph& g, std::uint64_t budget) {
  BergeCertificate cert;
  if (auto h = find_odd_hole_bruteforce(g, budget)) {
    cert.berge = false;
    cert.odd_hole = *h;
    return cert;
  }
  if (auto h = find_odd_hole_bruteforce(complement(g), budget)) {
    cert.berge = false;
    AntiholeWitness a;
    a.cycle = h->cycle;
    cert.odd_antihole = a;
    return cert;
  }
  cert.berge = true;
  return cert;
}

}  // namespace prismatic
