// Command line front end: detection, class recognition, coloring, the
// SAT-gadget reductions and the acceptance suite, with JSON reports.
//
// Exit codes: 0 ran to completion (color, reduce, verify with all passes),
// 10 structure found / member, 11 not found / non-member, 2 input error,
// 3 precondition violation, 4 budget exhausted, 1 internal failure or
// cross-check mismatch.

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "prismatic/coloring.hpp"
#include "prismatic/errors.hpp"
#include "prismatic/graph.hpp"
#include "prismatic/holes.hpp"
#include "prismatic/oracle.hpp"
#include "prismatic/parity.hpp"
#include "prismatic/prism_pyramid.hpp"
#include "prismatic/recognize.hpp"
#include "prismatic/reductions.hpp"
#include "prismatic/verification.hpp"

using nlohmann::json;
using namespace prismatic;

namespace {

constexpr int kExitFound = 10;
constexpr int kExitAbsent = 11;
constexpr int kExitInput = 2;
constexpr int kExitPrecondition = 3;
constexpr int kExitBudget = 4;

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream f(path, std::ios::binary);
  if (!f) throw ParseError("cannot open input file " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

std::string digest_hex(const std::string& s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string first_nonempty_line(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
    if (!line.empty()) return line;
  }
  return {};
}

bool looks_like_edge_list(const std::string& text) {
  std::istringstream probe(first_nonempty_line(text));
  long long a, b;
  return static_cast<bool>(probe >> a >> b);
}

Graph parse_graph_text(const std::string& text) {
  if (looks_like_edge_list(text)) return parse_edge_list(text);
  return parse_graph6(first_nonempty_line(text));
}

bool looks_like_cnf(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok)) continue;
    if (tok == "c" || tok[0] == 'c') continue;
    return tok == "p";
  }
  return false;
}

// ---- witness serialization ----

json path_json(const Path& p) { return json(p.v); }

json hole_json(const HoleWitness& w, const char* kind) {
  return {{"kind", kind}, {"cycle", w.cycle}, {"length", w.length()}, {"odd", w.odd()}};
}

json antihole_json(const AntiholeWitness& w) {
  return {{"kind", "antihole"}, {"cycle", w.cycle}, {"length", w.length()}, {"odd", w.odd()}};
}

json prism_json(const PrismWitness& w) {
  return {{"kind", "prism"},
          {"parity", parity_name(w.parity())},
          {"triangle_a", w.a.v},
          {"triangle_b", w.b.v},
          {"paths", {path_json(w.paths[0]), path_json(w.paths[1]), path_json(w.paths[2])}},
          {"lengths", {w.paths[0].length(), w.paths[1].length(), w.paths[2].length()}},
          {"vertices", w.vertex_list()}};
}

json pyramid_json(const PyramidWitness& w) {
  return {{"kind", "pyramid"},
          {"apex", w.apex},
          {"triangle", w.triangle.v},
          {"paths", {path_json(w.paths[0]), path_json(w.paths[1]), path_json(w.paths[2])}},
          {"lengths", {w.paths[0].length(), w.paths[1].length(), w.paths[2].length()}},
          {"vertices", w.vertex_list()}};
}

json structure_json(const StructureWitness& w) {
  return w.is_prism() ? prism_json(w.prism()) : pyramid_json(w.pyramid());
}

json lgk4_json(const LGK4Witness& w) {
  json corners = json::array();
  for (const auto& row : w.corners) corners.push_back(row);
  json rungs = json::array();
  for (const auto& r : w.rungs) rungs.push_back(path_json(r));
  return {{"kind", "lg-subdivided-k4"}, {"corners", corners},     {"rungs", rungs},
          {"proper", w.proper},         {"bipartite", w.bipartite}, {"vertices", w.vertex_list()}};
}

json oracle_witness_json(const OracleWitness& w) {
  return std::visit(
      [](const auto& x) -> json {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, PrismWitness>)
          return prism_json(x);
        else if constexpr (std::is_same_v<T, PyramidWitness>)
          return pyramid_json(x);
        else if constexpr (std::is_same_v<T, LGK4Witness>)
          return lgk4_json(x);
        else if constexpr (std::is_same_v<T, HoleWitness>)
          return hole_json(x, "hole");
        else
          return antihole_json(x);
      },
      w);
}

json input_json(const std::string& raw, const Graph& g) {
  return {{"digest", digest_hex(raw)}, {"order", g.order()}, {"edges", g.edge_count()}};
}

void emit(const json& report, const std::string& report_path) {
  std::cout << report.dump(2) << "\n";
  if (!report_path.empty()) {
    std::ofstream f(report_path);
    f << report.dump(2) << "\n";
  }
}

double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

struct CommonFlags {
  std::string input;
  std::string report_path;
  bool checked = false;
  bool unchecked = false;
  bool oracle = false;
  std::uint64_t budget = kDefaultBudget;

  DetectOptions detect_options() const {
    DetectOptions o;
    if (checked) o.mode = PrecondMode::Checked;
    if (unchecked) o.mode = PrecondMode::Unchecked;
    o.hole_budget = budget;
    return o;
  }
};

void add_common(CLI::App* cmd, CommonFlags& f, bool with_modes) {
  cmd->add_option("input", f.input, "graph file (graph6 or edge list), or - for stdin")
      ->required();
  cmd->add_option("--report", f.report_path, "also write the JSON report to this file");
  cmd->add_option("--budget", f.budget, "work budget for searches and oracles")
      ->envname("PRISMATIC_BUDGET");
  if (with_modes) {
    auto* c = cmd->add_flag("--checked", f.checked, "verify detector preconditions first");
    auto* u = cmd->add_flag("--unchecked", f.unchecked, "skip precondition verification");
    c->excludes(u);
  }
}

// ---- detect ----

struct DetectOutcome {
  bool found = false;
  json witness;           // null when absent
  json extra;             // kind-specific additions (e.g. stage)
};

DetectOutcome run_detect(const std::string& kind, const Graph& g, const CommonFlags& f) {
  DetectOutcome out;
  const DetectOptions opts = f.detect_options();
  if (kind == "pyramid-or-prism") {
    auto w = detect_pyramid_or_prism_v1(g);
    out.found = w.has_value();
    if (w) out.witness = structure_json(*w);
  } else if (kind == "pyramid-or-prism-fast") {
    auto w = detect_pyramid_or_prism_v2(g, true);
    out.found = w.found;
    if (w.found) {
      out.witness = structure_json(*w.witness);
      out.extra["stage"] = w.stage;
      if (w.triangle) out.extra["triangle"] = w.triangle->v;
    }
  } else if (kind == "long-hole") {
    auto w = find_long_hole(g);
    out.found = w.has_value();
    if (w) out.witness = hole_json(*w, "hole");
  } else if (kind == "long-antihole") {
    auto w = find_long_antihole(g);
    out.found = w.has_value();
    if (w) out.witness = antihole_json(*w);
  } else if (kind == "even-prism") {
    auto w = detect_even_prism(g, opts);
    out.found = w.has_value();
    if (w) out.witness = prism_json(*w);
  } else if (kind == "odd-prism") {
    auto w = detect_odd_prism(g, opts);
    out.found = w.has_value();
    if (w) out.witness = prism_json(*w);
  } else if (kind == "lg-proper-k4") {
    auto w = detect_lg_proper_subdivision_k4(g, opts);
    out.found = w.has_value();
    if (w) out.witness = lgk4_json(*w);
  } else if (kind == "lg-bipartite-k4") {
    auto w = detect_lg_bipartite_subdivision_k4(g, opts);
    out.found = w.has_value();
    if (w) out.witness = lgk4_json(*w);
  } else {
    throw ParseError("unknown detect kind: " + kind);
  }
  return out;
}

// Oracle verdict for a detect kind; the two hole kinds use the exhaustive
// cycle enumerator, the rest the subset oracle.
bool oracle_verdict(const std::string& kind, const Graph& g, std::uint64_t budget, json* jw) {
  auto by_kind = [&](OracleKind k) {
    OracleOptions oo;
    oo.budget = budget;
    auto w = oracle_find(g, k, oo);
    if (w && jw) *jw = oracle_witness_json(*w);
    return w.has_value();
  };
  if (kind == "pyramid-or-prism" || kind == "pyramid-or-prism-fast")
    return by_kind(OracleKind::PrismAny) || by_kind(OracleKind::Pyramid);
  if (kind == "long-hole") {
    auto holes = enumerate_chordless_cycles(g, 5, g.order(), budget);
    if (!holes.empty() && jw) *jw = hole_json(holes.front(), "hole");
    return !holes.empty();
  }
  if (kind == "long-antihole") {
    auto holes = enumerate_chordless_cycles(complement(g), 5, g.order(), budget);
    if (!holes.empty() && jw) {
      AntiholeWitness a;
      a.cycle = holes.front().cycle;
      *jw = antihole_json(a);
    }
    return !holes.empty();
  }
  if (kind == "even-prism") return by_kind(OracleKind::PrismEven);
  if (kind == "odd-prism") return by_kind(OracleKind::PrismOdd);
  if (kind == "lg-proper-k4") return by_kind(OracleKind::LgProperSubdivK4);
  if (kind == "lg-bipartite-k4") return by_kind(OracleKind::LgBipartiteSubdivK4);
  throw ParseError("unknown detect kind: " + kind);
}

int cmd_detect(const std::string& kind, const CommonFlags& f) {
  const std::string raw = read_input(f.input);
  auto t0 = std::chrono::steady_clock::now();
  Graph g = parse_graph_text(raw);
  const double parse_ms = ms_since(t0);

  t0 = std::chrono::steady_clock::now();
  DetectOutcome out = run_detect(kind, g, f);
  const double run_ms = ms_since(t0);

  json report{{"command", "detect"},
              {"kind", kind},
              {"input", input_json(raw, g)},
              {"verdict", out.found ? "found" : "not-found"},
              {"witness", out.witness.is_null() ? json(nullptr) : out.witness},
              {"timings", {{"parse_ms", parse_ms}, {"run_ms", run_ms}}}};
  for (auto& [k, v] : out.extra.items()) report[k] = v;

  bool mismatch = false;
  if (f.oracle) {
    t0 = std::chrono::steady_clock::now();
    json jw;
    const bool ov = oracle_verdict(kind, g, f.budget, &jw);
    report["oracle"] = {{"verdict", ov ? "found" : "not-found"},
                        {"agrees", ov == out.found},
                        {"witness", jw.is_null() ? json(nullptr) : jw}};
    report["timings"]["oracle_ms"] = ms_since(t0);
    mismatch = ov != out.found;
  }
  report["exit"] = mismatch ? 1 : (out.found ? kExitFound : kExitAbsent);
  emit(report, f.report_path);
  return report["exit"].get<int>();
}

// ---- recognize ----

int cmd_recognize(const std::string& cls, const CommonFlags& f) {
  GraphClass qc;
  if (cls == "A" || cls == "a")
    qc = GraphClass::A;
  else if (cls == "A'" || cls == "a'" || cls == "A-prime" || cls == "aprime")
    qc = GraphClass::APrime;
  else
    throw ParseError("unknown class (use A or A'): " + cls);

  const std::string raw = read_input(f.input);
  auto t0 = std::chrono::steady_clock::now();
  Graph g = parse_graph_text(raw);
  const double parse_ms = ms_since(t0);

  t0 = std::chrono::steady_clock::now();
  RecognitionReport rep =
      qc == GraphClass::A ? recognize_class_a(g, f.budget) : recognize_class_a_prime(g, f.budget);
  const double run_ms = ms_since(t0);

  json cert(nullptr);
  if (rep.antihole) cert = antihole_json(*rep.antihole);
  if (rep.structure) cert = structure_json(*rep.structure);
  if (rep.odd_hole) cert = hole_json(*rep.odd_hole, "hole");
  if (rep.odd_antihole) cert = antihole_json(*rep.odd_antihole);
  if (rep.odd_prism) cert = prism_json(*rep.odd_prism);

  json report{{"command", "recognize"},
              {"class", graph_class_name(rep.queried)},
              {"input", input_json(raw, g)},
              {"verdict", rep.member ? "member" : "non-member"},
              {"stage", rep.stage},
              {"stage_name", rep.stage_name},
              {"certificate_kind", rep.certificate_kind()},
              {"certificate", cert},
              {"timings", {{"parse_ms", parse_ms}, {"run_ms", run_ms}}},
              {"exit", rep.member ? kExitFound : kExitAbsent}};
  emit(report, f.report_path);
  return report["exit"].get<int>();
}

// ---- color ----

int cmd_color(const CommonFlags& f) {
  const std::string raw = read_input(f.input);
  auto t0 = std::chrono::steady_clock::now();
  Graph g = parse_graph_text(raw);
  const double parse_ms = ms_since(t0);

  t0 = std::chrono::steady_clock::now();
  Coloring col = color_class_a(g, f.budget);
  const double run_ms = ms_since(t0);

  json trace = json::array();
  for (const auto& st : col.trace)
    trace.push_back({{"merged_x", st.group_x}, {"merged_y", st.group_y}});
  json report{{"command", "color"},
              {"input", input_json(raw, g)},
              {"verdict", "colored"},
              {"palette", col.palette},
              {"colors", col.color},
              {"trace", trace},
              {"timings", {{"parse_ms", parse_ms}, {"run_ms", run_ms}}},
              {"exit", 0}};
  emit(report, f.report_path);
  return 0;
}

// ---- reduce ----

std::pair<VertexId, VertexId> pick_pi_pair(const Graph& g, int a, int b) {
  if (a >= 0 && b >= 0) return {a, b};
  for (VertexId x = 0; x < g.order(); ++x) {
    if (g.degree(x) != 2) continue;
    for (VertexId y = x + 1; y < g.order(); ++y) {
      if (g.degree(y) != 2 || g.adjacent(x, y)) continue;
      return {x, y};
    }
  }
  throw PreconditionViolation("no non-adjacent pair of degree-2 vertices to serve as a and b");
}

std::string stem_of(const std::string& path) {
  if (path == "-") return "reduction";
  auto slash = path.find_last_of('/');
  std::string base = slash == std::string::npos ? path : path.substr(slash + 1);
  auto dot = base.find_last_of('.');
  if (dot != std::string::npos && dot > 0) base = base.substr(0, dot);
  return base;
}

int cmd_reduce(const std::string& target, const CommonFlags& f, int opt_a, int opt_b,
               std::string out_prefix) {
  const std::string raw = read_input(f.input);
  auto t0 = std::chrono::steady_clock::now();

  PiInstance inst;
  json source;
  if (looks_like_cnf(raw)) {
    CnfFormula formula = parse_dimacs_cnf(raw);
    inst = build_pi_instance(formula);
    source = {{"format", "dimacs-cnf"},
              {"variables", formula.variables},
              {"clauses", formula.clauses.size()}};
  } else {
    Graph g = parse_graph_text(raw);
    auto [a, b] = pick_pi_pair(g, opt_a, opt_b);
    inst = make_pi_instance(g, a, b);
    source = {{"format", "graph"}, {"a", a}, {"b", b}};
  }
  const double parse_ms = ms_since(t0);

  t0 = std::chrono::steady_clock::now();
  std::vector<ReducedGraph> outs;
  if (target == "prism")
    outs.push_back(reduce_pi_to_prism(inst));
  else if (target == "odd-prism")
    outs = reduce_pi_to_odd_prism(inst);
  else if (target == "even-prism")
    outs = reduce_pi_to_even_prism(inst);
  else if (target == "lg-proper-k4")
    outs.push_back(reduce_pi_to_lgpsk4(inst));
  else if (target == "lg-bipartite-k4")
    outs = reduce_pi_to_lgbsk4(inst);
  else
    throw ParseError("unknown reduce target: " + target);
  const double run_ms = ms_since(t0);

  if (out_prefix.empty()) out_prefix = stem_of(f.input) + "-" + target;
  const std::string g6_path = out_prefix + ".g6";
  const std::string names_path = out_prefix + ".names.json";
  std::ofstream g6(g6_path);
  json names = json::array();
  json variants = json::array();
  for (const auto& rg : outs) {
    g6 << encode_graph6(rg.graph) << "\n";
    names.push_back({{"name", rg.name}, {"vertices", rg.vertex_names}});
    variants.push_back(
        {{"name", rg.name}, {"order", rg.graph.order()}, {"edges", rg.graph.edge_count()}});
  }
  g6.close();
  std::ofstream nf(names_path);
  nf << names.dump(2) << "\n";

  json report{{"command", "reduce"},
              {"target", target},
              {"input", {{"digest", digest_hex(raw)}}},
              {"source", source},
              {"instance", {{"order", inst.graph.order()}, {"a", inst.a}, {"b", inst.b}}},
              {"verdict", "reduced"},
              {"variants", variants},
              {"files", {{"graph6", g6_path}, {"names", names_path}}},
              {"timings", {{"parse_ms", parse_ms}, {"run_ms", run_ms}}},
              {"exit", 0}};
  emit(report, f.report_path);
  return 0;
}

// ---- verify ----

int cmd_verify(const std::string& suite, const VerifyOptions& vo, const std::string& report_path) {
  std::vector<int> indices;
  if (suite == "all") {
    for (int i = 1; i <= 9; ++i) indices.push_back(i);
  } else {
    bool named = false;
    for (int i = 1; i <= 9; ++i)
      if (criterion_names()[i] == suite) {
        indices.push_back(i);
        named = true;
      }
    if (!named) {
      int i = 0;
      try {
        i = std::stoi(suite);
      } catch (...) {
        throw ParseError("unknown suite (use all, 1..9, or a criterion name): " + suite);
      }
      if (i < 1 || i > 9)
        throw ParseError("criterion index out of range (1..9): " + suite);
      indices.push_back(i);
    }
  }

  json results = json::array();
  int failures = 0;
  for (int i : indices) {
    CriterionResult r = run_criterion(i, vo);
    std::cout << "criterion " << r.index << " (" << r.name << "): "
              << (r.pass ? "PASS" : "FAIL") << " — " << r.detail << "\n";
    std::cout.flush();
    results.push_back(
        {{"index", r.index}, {"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
    if (!r.pass) ++failures;
  }
  std::cout << (indices.size() - failures) << "/" << indices.size() << " criteria passed\n";
  if (!report_path.empty()) {
    json report{{"command", "verify"},
                {"seed", vo.seed},
                {"criteria", results},
                {"failures", failures},
                {"exit", failures == 0 ? 0 : 1}};
    std::ofstream f(report_path);
    f << report.dump(2) << "\n";
  }
  return failures == 0 ? 0 : 1;
}

json error_json(const char* type, const std::exception& e, const char* detail = nullptr) {
  json j{{"error", {{"type", type}, {"message", e.what()}}}};
  if (detail) j["error"]["detail"] = detail;
  return j;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"structure detection, class recognition, coloring and reduction toolkit"};
  app.require_subcommand(1);

  CommonFlags detect_flags;
  std::string detect_kind;
  auto* detect = app.add_subcommand("detect", "search for an induced structure");
  detect
      ->add_option("kind", detect_kind,
                   "pyramid-or-prism, pyramid-or-prism-fast, long-hole, long-antihole, "
                   "even-prism, odd-prism, lg-proper-k4, lg-bipartite-k4")
      ->required();
  add_common(detect, detect_flags, true);
  detect->add_flag("--oracle", detect_flags.oracle,
                   "cross-check against the exhaustive oracle; mismatch exits nonzero");

  CommonFlags rec_flags;
  std::string rec_class;
  auto* rec = app.add_subcommand("recognize", "test membership in class A or A'");
  rec->add_option("class", rec_class, "A or A'")->required();
  add_common(rec, rec_flags, false);

  CommonFlags color_flags;
  auto* color = app.add_subcommand("color", "color a class-A member by even-pair contraction");
  add_common(color, color_flags, false);

  CommonFlags reduce_flags;
  std::string reduce_target;
  int reduce_a = -1, reduce_b = -1;
  std::string reduce_out;
  auto* reduce = app.add_subcommand("reduce", "build a hardness-reduction graph");
  reduce
      ->add_option("target", reduce_target,
                   "prism, odd-prism, even-prism, lg-proper-k4, lg-bipartite-k4")
      ->required();
  add_common(reduce, reduce_flags, false);
  reduce->add_option("--a", reduce_a, "first distinguished vertex (graph inputs)");
  reduce->add_option("--b", reduce_b, "second distinguished vertex (graph inputs)");
  reduce->add_option("--output", reduce_out, "output file prefix");

  std::string verify_suite = "all";
  VerifyOptions verify_opts;
  std::string verify_report;
  auto* verify = app.add_subcommand("verify", "run acceptance criteria");
  verify->add_option("suite", verify_suite, "all, 1..9, or a criterion name");
  verify->add_option("--seed", verify_opts.seed, "corpus seed")->capture_default_str();
  verify->add_option("--jobs", verify_opts.jobs, "worker threads (0 = hardware)");
  verify->add_option("--budget", verify_opts.budget, "work budget for searches and oracles")
      ->envname("PRISMATIC_BUDGET");
  verify->add_option("--report", verify_report, "write the JSON report to this file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // --help and friends exit 0; anything else is an input error
    return app.exit(e) == 0 ? 0 : kExitInput;
  }

  try {
    if (*detect) return cmd_detect(detect_kind, detect_flags);
    if (*rec) return cmd_recognize(rec_class, rec_flags);
    if (*color) return cmd_color(color_flags);
    if (*reduce) return cmd_reduce(reduce_target, reduce_flags, reduce_a, reduce_b, reduce_out);
    if (*verify) return cmd_verify(verify_suite, verify_opts, verify_report);
  } catch (const ParseError& e) {
    std::cout << error_json("input", e).dump(2) << "\n";
    return kExitInput;
  } catch (const PreconditionViolation& e) {
    std::cout << error_json("precondition", e, e.detail.empty() ? nullptr : e.detail.c_str())
                     .dump(2)
              << "\n";
    return kExitPrecondition;
  } catch (const BudgetExceeded& e) {
    std::cout << error_json("budget", e).dump(2) << "\n";
    return kExitBudget;
  } catch (const std::exception& e) {
    std::cout << error_json("internal", e).dump(2) << "\n";
    return 1;
  }
  return 0;
}
