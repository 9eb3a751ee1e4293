#include "prismatic/reductions.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace prismatic {

bool satisfies(const CnfFormula& f, const TruthAssignment& t) {
  if (static_cast<int>(t.value.size()) != f.variables)
    throw std::invalid_argument("assignment length does not match formula");
  for (const auto& cl : f.clauses) {
    bool ok = false;
    for (const Literal& l : cl) ok |= t.value[l.var] == l.positive;
    if (!ok) return false;
  }
  return true;
}

std::optional<TruthAssignment> sat_bruteforce(const CnfFormula& f) {
  if (f.variables < 0 || f.variables > 24)
    throw std::invalid_argument("brute-force SAT limited to 24 variables");
  const std::uint32_t lim = 1u << f.variables;
  for (std::uint32_t mask = 0; mask < lim; ++mask) {
    TruthAssignment t;
    t.value.resize(f.variables);
    for (int i = 0; i < f.variables; ++i) t.value[i] = (mask >> i) & 1u;
    if (satisfies(f, t)) return t;
  }
  return std::nullopt;
}

CnfFormula parse_dimacs_cnf(const std::string& text) {
  CnfFormula f;
  int declared_clauses = -1;
  std::size_t pos = 0;
  const std::size_t len = text.size();
  std::vector<Literal> pending;

  auto skip_ws = [&] {
    while (pos < len && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto skip_line = [&] {
    while (pos < len && text[pos] != '\n') ++pos;
  };

  bool have_header = false;
  while (true) {
    skip_ws();
    if (pos >= len) break;
    const char c = text[pos];
    if (c == 'c' || c == '%') {
      skip_line();
      continue;
    }
    if (c == 'p') {
      if (have_header) throw ParseError("duplicate header", pos);
      std::size_t line_end = text.find('\n', pos);
      if (line_end == std::string::npos) line_end = len;
      std::istringstream hdr(text.substr(pos, line_end - pos));
      std::string p, fmt;
      int nv = 0, nc = 0;
      if (!(hdr >> p >> fmt >> nv >> nc) || fmt != "cnf" || nv < 1 || nc < 0)
        throw ParseError("malformed \"p cnf\" header", pos);
      f.variables = nv;
      declared_clauses = nc;
      have_header = true;
      pos = line_end;
      continue;
    }
    if (!have_header) throw ParseError("clause data before the \"p cnf\" header", pos);
    if (c != '-' && !std::isdigit(static_cast<unsigned char>(c)))
      throw ParseError("unexpected character in clause data", pos);
    const std::size_t tok_start = pos;
    bool neg = false;
    if (c == '-') {
      neg = true;
      ++pos;
    }
    if (pos >= len || !std::isdigit(static_cast<unsigned char>(text[pos])))
      throw ParseError("dangling sign in clause data", tok_start);
    long val = 0;
    while (pos < len && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      val = val * 10 + (text[pos] - '0');
      if (val > 1'000'000) throw ParseError("literal out of range", tok_start);
      ++pos;
    }
    if (val == 0) {
      if (neg) throw ParseError("negative zero terminator", tok_start);
      if (pending.size() != 3)
        throw ParseError("clause does not have exactly three literals", tok_start);
      f.clauses.push_back({pending[0], pending[1], pending[2]});
      pending.clear();
      continue;
    }
    if (val > f.variables) throw ParseError("literal references an undeclared variable", tok_start);
    pending.push_back({static_cast<int>(val) - 1, !neg});
  }
  if (!have_header) throw ParseError("missing \"p cnf\" header");
  if (!pending.empty()) throw ParseError("unterminated clause at end of input");
  if (declared_clauses != static_cast<int>(f.clauses.size()))
    throw ParseError("clause count does not match the header");
  return f;
}

namespace {

// Offsets inside the 8-vertex variable gadget.
enum : int { kA = 0, kB = 1, kT = 2, kF = 3, kAp = 4, kBp = 5, kTp = 6, kFp = 7 };

void validate_pi(const Graph& g, VertexId a, VertexId b) {
  const int n = g.order();
  if (a < 0 || b < 0 || a >= n || b >= n || a == b)
    throw PreconditionViolation("instance needs two distinct vertices of the graph");
  if (!triangles(g).empty())
    throw PreconditionViolation("instance graph must be triangle-free");
  if (g.adjacent(a, b)) throw PreconditionViolation("the two special vertices must be non-adjacent");
  if (g.degree(a) != 2 || g.degree(b) != 2)
    throw PreconditionViolation("the two special vertices must both have degree 2");
}

// Rotate/reflect a cycle so the smallest vertex comes first, followed by the
// smaller of its two cycle neighbours (matches the hole-enumeration order).
std::vector<VertexId> canonical_cycle(std::vector<VertexId> c) {
  const std::size_t k = c.size();
  const std::size_t at =
      std::min_element(c.begin(), c.end()) - c.begin();
  std::vector<VertexId> out;
  out.reserve(k);
  const VertexId prev = c[(at + k - 1) % k];
  const VertexId next = c[(at + 1) % k];
  if (next <= prev)
    for (std::size_t i = 0; i < k; ++i) out.push_back(c[(at + i) % k]);
  else
    for (std::size_t i = 0; i < k; ++i) out.push_back(c[(at + k - i) % k]);
  return out;
}

}  // namespace

PiInstance make_pi_instance(const Graph& g, VertexId a, VertexId b) {
  validate_pi(g, a, b);
  PiInstance inst;
  inst.graph = g;
  inst.a = a;
  inst.b = b;
  inst.names.reserve(g.order());
  for (VertexId v = 0; v < g.order(); ++v) inst.names.push_back(std::to_string(v));
  return inst;
}

PiInstance build_pi_instance(const CnfFormula& f) {
  const int n = f.variables;
  const int m = static_cast<int>(f.clauses.size());
  if (n < 1) throw std::invalid_argument("formula needs at least one variable");
  for (const auto& cl : f.clauses)
    for (const Literal& l : cl)
      if (l.var < 0 || l.var >= n) throw std::invalid_argument("literal out of range");

  const VertexId a = 8 * n + 5 * m;
  const VertexId b = a + 1;
  auto var_base = [&](int i) { return 8 * i; };          // 0-based variable
  auto cl_base = [&](int j) { return 8 * n + 5 * j; };   // 0-based clause

  std::vector<std::pair<VertexId, VertexId>> edges;
  for (int i = 0; i < n; ++i) {
    const int g0 = var_base(i);
    const std::pair<int, int> gadget[10] = {{kA, kT},  {kA, kF},  {kB, kT},  {kB, kF},
                                            {kAp, kTp}, {kAp, kFp}, {kBp, kTp}, {kBp, kFp},
                                            {kT, kFp}, {kTp, kF}};
    for (auto [u, v] : gadget) edges.emplace_back(g0 + u, g0 + v);
  }
  for (int j = 0; j < m; ++j) {
    const int c0 = cl_base(j);
    for (int p = 0; p < 3; ++p) {
      edges.emplace_back(c0, c0 + 2 + p);      // c_j to each clause vertex
      edges.emplace_back(c0 + 1, c0 + 2 + p);  // d_j likewise
    }
    for (int p = 0; p < 3; ++p) {
      const Literal& l = f.clauses[j][p];
      const int side = l.positive ? kF : kT;  // the side the hole must avoid
      edges.emplace_back(c0 + 2 + p, var_base(l.var) + side);
      edges.emplace_back(c0 + 2 + p, var_base(l.var) + side + 4);
    }
  }
  for (int i = 0; i + 1 < n; ++i) {
    edges.emplace_back(var_base(i) + kB, var_base(i + 1) + kA);
    edges.emplace_back(var_base(i) + kBp, var_base(i + 1) + kAp);
  }
  if (m > 0) edges.emplace_back(var_base(n - 1) + kBp, cl_base(0));
  for (int j = 0; j + 1 < m; ++j) edges.emplace_back(cl_base(j) + 1, cl_base(j + 1));
  edges.emplace_back(a, var_base(0) + kA);
  edges.emplace_back(a, var_base(0) + kAp);
  if (m > 0) {
    edges.emplace_back(b, cl_base(m - 1) + 1);
  } else {
    edges.emplace_back(b, var_base(n - 1) + kBp);
  }
  edges.emplace_back(b, var_base(n - 1) + kB);

  PiInstance inst;
  inst.graph = Graph::from_edges(8 * n + 5 * m + 2, edges);
  inst.a = a;
  inst.b = b;
  inst.formula = f;

  inst.names.resize(inst.graph.order());
  for (int i = 0; i < n; ++i) {
    const std::string s = std::to_string(i + 1);
    const int g0 = var_base(i);
    inst.names[g0 + kA] = "a" + s;
    inst.names[g0 + kB] = "b" + s;
    inst.names[g0 + kT] = "t" + s;
    inst.names[g0 + kF] = "f" + s;
    inst.names[g0 + kAp] = "a'" + s;
    inst.names[g0 + kBp] = "b'" + s;
    inst.names[g0 + kTp] = "t'" + s;
    inst.names[g0 + kFp] = "f'" + s;
  }
  for (int j = 0; j < m; ++j) {
    const std::string s = std::to_string(j + 1);
    const int c0 = cl_base(j);
    inst.names[c0] = "c" + s;
    inst.names[c0 + 1] = "d" + s;
    for (int p = 0; p < 3; ++p) inst.names[c0 + 2 + p] = "v" + s + "." + std::to_string(p + 1);
  }
  inst.names[a] = "a";
  inst.names[b] = "b";

  // Construction audits.
  if (inst.graph.edge_count() != static_cast<std::size_t>(12 * n + 13 * m + 2))
    throw std::logic_error("gadget edge tally is off");
  validate_pi(inst.graph, a, b);
  return inst;
}

std::optional<HoleWitness> solve_pi_bruteforce(const PiInstance& inst, std::uint64_t budget) {
  const Graph& g = inst.graph;
  validate_pi(g, inst.a, inst.b);
  VertexSet na = g.neighbors(inst.a);
  const VertexId u1 = na.first();
  const VertexId u2 = na.next(u1);

  std::uint64_t used = 0;
  std::vector<VertexId> path{u1};
  std::optional<HoleWitness> found;

  // Chordless paths from u1 to u2 avoiding `a`; accept the first through `b`.
  auto rec = [&](auto&& self, VertexId last, const VertexSet& forbid, bool saw_b) -> bool {
    if (++used > budget) throw BudgetExceeded("hole search budget exhausted");
    VertexSet cand = g.neighbors(last) - forbid;
    if (cand.test(u2)) {
      if (saw_b || u2 == inst.b) {
        std::vector<VertexId> cyc{inst.a};
        cyc.insert(cyc.end(), path.begin(), path.end());
        cyc.push_back(u2);
        HoleWitness h;
        h.cycle = canonical_cycle(std::move(cyc));
        if (!is_chordless_cycle_of(g, h.cycle) || h.cycle.size() < 4)
          throw std::logic_error("assembled cycle fails the chordless re-check");
        found = h;
        return true;
      }
      cand.reset(u2);
    }
    for (VertexId v = cand.first(); v >= 0; v = cand.next(v)) {
      VertexSet next_forbid = forbid | g.neighbors(last);
      next_forbid.set(v);
      path.push_back(v);
      const bool done = self(self, v, next_forbid, saw_b || v == inst.b);
      path.pop_back();
      if (done) return true;
    }
    return false;
  };
  VertexSet forbid0 = VertexSet::of({u1, inst.a});
  rec(rec, u1, forbid0, u1 == inst.b);
  return found;
}

TruthAssignment extract_assignment(const PiInstance& inst, const HoleWitness& h) {
  const int n = inst.formula.variables;
  const int m = static_cast<int>(inst.formula.clauses.size());
  if (n == 0) throw std::invalid_argument("instance does not carry a formula");
  if (auto err = validate_hole(inst.graph, h))
    throw std::invalid_argument("invalid hole: " + *err);

  VertexSet z;
  for (VertexId v : h.cycle) z.set(v);
  if (!z.test(inst.a) || !z.test(inst.b))
    throw std::invalid_argument("hole misses a distinguished vertex");
  if (h.cycle.size() != static_cast<std::size_t>(2 + 6 * n + 3 * m))
    throw std::invalid_argument("hole has the wrong number of vertices for this gadget graph");

  TruthAssignment t;
  t.value.resize(n);
  for (int i = 0; i < n; ++i) {
    const int g0 = 8 * i;
    if (!z.test(g0 + kA) || !z.test(g0 + kB) || !z.test(g0 + kAp) || !z.test(g0 + kBp))
      throw std::invalid_argument("hole skips a variable-gadget chain vertex");
    const bool t_in = z.test(g0 + kT), tp_in = z.test(g0 + kTp);
    const bool f_in = z.test(g0 + kF), fp_in = z.test(g0 + kFp);
    if (t_in != tp_in || f_in != fp_in || t_in == f_in)
      throw std::invalid_argument("hole picks inconsistent sides of a variable gadget");
    t.value[i] = t_in;
  }
  for (int j = 0; j < m; ++j) {
    const int c0 = 8 * n + 5 * j;
    if (!z.test(c0) || !z.test(c0 + 1))
      throw std::invalid_argument("hole skips a clause-gadget chain vertex");
    const int picked = static_cast<int>(z.test(c0 + 2)) + static_cast<int>(z.test(c0 + 3)) +
                       static_cast<int>(z.test(c0 + 4));
    if (picked != 1) throw std::invalid_argument("hole picks an unexpected number of clause vertices");
  }
  if (!satisfies(inst.formula, t))
    throw std::logic_error("extracted assignment does not satisfy the source formula");
  return t;
}

namespace {

struct Stripped {
  InducedSubgraph sub;
  VertexId ap, app;  // remapped min/max neighbour of a
  VertexId bp, bpp;  // remapped min/max neighbour of b
  std::vector<std::string> names;
};

Stripped strip_special(const PiInstance& inst) {
  validate_pi(inst.graph, inst.a, inst.b);
  const Graph& g = inst.graph;
  VertexSet keep = VertexSet::universe(g.order());
  keep.reset(inst.a);
  keep.reset(inst.b);
  Stripped s{induced_subgraph(g, keep), 0, 0, 0, 0, {}};
  VertexSet na = g.neighbors(inst.a);
  VertexSet nb = g.neighbors(inst.b);
  s.ap = s.sub.new_of_old[na.first()];
  s.app = s.sub.new_of_old[na.next(na.first())];
  s.bp = s.sub.new_of_old[nb.first()];
  s.bpp = s.sub.new_of_old[nb.next(nb.first())];
  s.names.reserve(s.sub.old_of_new.size());
  for (VertexId ov : s.sub.old_of_new)
    s.names.push_back(ov < static_cast<VertexId>(inst.names.size()) ? inst.names[ov]
                                                                    : std::to_string(ov));
  return s;
}

ReducedGraph prism_base(const PiInstance& inst, std::array<VertexId, 5>& av,
                        std::array<VertexId, 5>& bv) {
  Stripped s = strip_special(inst);
  const int k = s.sub.graph.order();
  for (int i = 0; i < 5; ++i) {
    av[i] = k + i;
    bv[i] = k + 5 + i;
  }
  auto edges = s.sub.graph.edges();
  for (const auto& side : {std::pair{&av, std::pair{s.ap, s.app}},
                           std::pair{&bv, std::pair{s.bp, s.bpp}}}) {
    const auto& w = *side.first;
    edges.emplace_back(w[0], w[1]);
    edges.emplace_back(w[0], w[2]);
    edges.emplace_back(w[1], w[2]);
    edges.emplace_back(w[1], w[3]);
    edges.emplace_back(w[2], w[4]);
    edges.emplace_back(w[3], side.second.first);
    edges.emplace_back(w[4], side.second.second);
  }
  edges.emplace_back(av[0], bv[0]);

  ReducedGraph out;
  out.graph = Graph::from_edges(k + 10, edges);
  out.name = "G";
  out.vertex_names = std::move(s.names);
  for (int i = 1; i <= 5; ++i) out.vertex_names.push_back("a" + std::to_string(i));
  for (int i = 1; i <= 5; ++i) out.vertex_names.push_back("b" + std::to_string(i));
  if (triangles(out.graph).size() != 2)
    throw std::logic_error("prism reduction should leave exactly two triangles");
  return out;
}

// Replace edge (u,v) by a two-edge path through a fresh vertex.
void subdivide_edge(ReducedGraph& rg, VertexId u, VertexId v, const std::string& name) {
  auto edges = rg.graph.edges();
  const auto it = std::find_if(edges.begin(), edges.end(), [&](const auto& e) {
    return (e.first == u && e.second == v) || (e.first == v && e.second == u);
  });
  if (it == edges.end()) throw std::logic_error("subdividing a missing edge");
  const VertexId fresh = rg.graph.order();
  *it = {u, fresh};
  edges.emplace_back(fresh, v);
  rg.graph = Graph::from_edges(fresh + 1, edges);
  rg.vertex_names.push_back(name);
}

std::vector<ReducedGraph> eight_parity_variants(const PiInstance& inst) {
  std::array<VertexId, 5> av{}, bv{};
  ReducedGraph base = prism_base(inst, av, bv);
  std::vector<ReducedGraph> out;
  out.reserve(8);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k) {
        ReducedGraph rg = base;
        rg.name = "G_" + std::to_string(i) + std::to_string(j) + std::to_string(k);
        if (i) subdivide_edge(rg, av[1], av[3], "s_a2a4");
        if (j) subdivide_edge(rg, av[2], av[4], "s_a3a5");
        if (k) subdivide_edge(rg, av[0], bv[0], "s_a1b1");
        out.push_back(std::move(rg));
      }
  return out;
}

}  // namespace

ReducedGraph reduce_pi_to_prism(const PiInstance& inst) {
  std::array<VertexId, 5> av{}, bv{};
  return prism_base(inst, av, bv);
}

std::vector<ReducedGraph> reduce_pi_to_odd_prism(const PiInstance& inst) {
  return eight_parity_variants(inst);
}

std::vector<ReducedGraph> reduce_pi_to_even_prism(const PiInstance& inst) {
  return eight_parity_variants(inst);
}

namespace {

// Corner ids in declaration order: the corner of triangle X pointing at Y.
enum : int {
  kVab = 0, kVac, kVad, kVba, kVbc, kVbd, kVca, kVcb, kVcd, kVda, kVdb, kVdc
};

ReducedGraph k4_frame_base(const PiInstance& inst, std::array<VertexId, 12>& corner) {
  Stripped s = strip_special(inst);
  const int k = s.sub.graph.order();
  for (int i = 0; i < 12; ++i) corner[i] = k + i;

  auto edges = s.sub.graph.edges();
  const int tri[4][3] = {{kVab, kVac, kVad}, {kVba, kVbc, kVbd}, {kVca, kVcb, kVcd},
                         {kVda, kVdb, kVdc}};
  for (const auto& t : tri) {
    edges.emplace_back(corner[t[0]], corner[t[1]]);
    edges.emplace_back(corner[t[0]], corner[t[2]]);
    edges.emplace_back(corner[t[1]], corner[t[2]]);
  }
  edges.emplace_back(corner[kVab], corner[kVba]);
  edges.emplace_back(corner[kVdc], corner[kVcd]);
  edges.emplace_back(corner[kVbd], corner[kVdb]);
  edges.emplace_back(corner[kVbc], corner[kVcb]);
  edges.emplace_back(corner[kVad], s.ap);
  edges.emplace_back(corner[kVac], s.app);
  edges.emplace_back(corner[kVda], s.bp);
  edges.emplace_back(corner[kVca], s.bpp);

  ReducedGraph out;
  out.graph = Graph::from_edges(k + 12, edges);
  out.name = "G";
  out.vertex_names = std::move(s.names);
  static const char* kCornerNames[12] = {"v_ab", "v_ac", "v_ad", "v_ba", "v_bc", "v_bd",
                                         "v_ca", "v_cb", "v_cd", "v_da", "v_db", "v_dc"};
  for (const char* nm : kCornerNames) out.vertex_names.push_back(nm);
  if (triangles(out.graph).size() != 4)
    throw std::logic_error("frame reduction should leave exactly four triangles");
  return out;
}

}  // namespace

ReducedGraph reduce_pi_to_lgpsk4(const PiInstance& inst) {
  std::array<VertexId, 12> corner{};
  return k4_frame_base(inst, corner);
}

std::vector<ReducedGraph> reduce_pi_to_lgbsk4(const PiInstance& inst) {
  std::array<VertexId, 12> corner{};
  ReducedGraph base = k4_frame_base(inst, corner);
  Stripped s = strip_special(inst);
  std::vector<ReducedGraph> out;
  out.reserve(4);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      ReducedGraph rg = base;
      rg.name = "G_" + std::to_string(i) + std::to_string(j);
      if (i) subdivide_edge(rg, corner[kVad], s.ap, "s_ad");
      if (j) subdivide_edge(rg, corner[kVac], s.app, "s_ac");
      out.push_back(std::move(rg));
    }
  return out;
}

}  // namespace prismatic
