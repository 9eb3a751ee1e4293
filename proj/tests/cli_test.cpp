// Drives the installed command line binary end to end: spawns it with popen,
// captures stdout, and re-validates every reported witness against the input
// graph.  The binary path comes from the build (PRISMATIC_BIN_PATH) and can
// be overridden with the PRISMATIC_BIN environment variable.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <sys/wait.h>
#include <unistd.h>

#include <cctype>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"
#include "prismatic/graph.hpp"
#include "prismatic/oracle.hpp"
#include "prismatic/structures.hpp"
#include "prismatic/verification.hpp"

using nlohmann::json;
using namespace prismatic;
namespace fs = std::filesystem;

namespace {

std::string binary_path() {
  if (const char* env = std::getenv("PRISMATIC_BIN")) return env;
  return PRISMATIC_BIN_PATH;
}

std::string slurp(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  REQUIRE(f.good());
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

void spit(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  f << text;
}

struct Fixtures {
  std::string dir;
  std::string evenprism9, prism6, c5, c6, c7, k4, lg_ones, pi_c6, cnf;
  int counter = 0;
};

Fixtures& fixtures() {
  static Fixtures fx = [] {
    Fixtures f;
    f.dir = (fs::temp_directory_path() /
             ("prismatic-cli-test-" + std::to_string(::getpid())))
                .string();
    fs::create_directories(f.dir);
    auto put = [&](const char* name, const std::string& text) {
      std::string path = f.dir + "/" + name;
      spit(path, text);
      return path;
    };
    f.evenprism9 = put("evenprism9.g6", encode_graph6(make_evenprism9()) + "\n");
    f.prism6 = put("prism6.g6", encode_graph6(make_prism6()) + "\n");
    f.c5 = put("c5.g6", encode_graph6(make_cycle(5)) + "\n");
    f.c6 = put("c6.g6", encode_graph6(make_cycle(6)) + "\n");
    f.c7 = put("c7.g6", encode_graph6(make_cycle(7)) + "\n");
    f.k4 = put("k4.g6", encode_graph6(make_complete(4)) + "\n");
    f.lg_ones = put("lg-ones.edges",
                    format_edge_list(build_lg_subdivided_k4({1, 1, 1, 1, 1, 1}).graph));
    f.pi_c6 = put("pi-c6.edges", format_edge_list(make_cycle(6)));
    f.cnf = put("one-clause.cnf", "c one satisfiable clause\np cnf 3 1\n1 -2 3 0\n");
    return f;
  }();
  return fx;
}

struct RunResult {
  int code = -1;
  std::string out;
};

RunResult run_cli(const std::string& args, const std::string& stdin_text = {},
                  const std::string& env_prefix = {}) {
  Fixtures& fx = fixtures();
  std::string cmd;
  if (!env_prefix.empty()) cmd += env_prefix + " ";
  cmd += "\"" + binary_path() + "\" " + args;
  if (stdin_text.empty()) {
    cmd += " < /dev/null";
  } else {
    std::string in = fx.dir + "/stdin-" + std::to_string(fx.counter++);
    spit(in, stdin_text);
    cmd += " < \"" + in + "\"";
  }
  cmd += " 2> /dev/null";
  FILE* p = ::popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  RunResult r;
  char buf[4096];
  std::size_t got;
  while ((got = std::fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, got);
  int status = ::pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

json parse_report(const RunResult& r) {
  CAPTURE(r.out);
  json j = json::parse(r.out, nullptr, false);
  REQUIRE_FALSE(j.is_discarded());
  return j;
}

// ---- witness reconstruction from report JSON ----

Path path_from(const json& j) {
  Path p;
  for (const auto& v : j) p.v.push_back(v.get<VertexId>());
  return p;
}

Triangle triangle_from(const json& j) {
  Triangle t;
  for (int i = 0; i < 3; ++i) t.v[i] = j.at(i).get<VertexId>();
  return t;
}

PrismWitness prism_from(const json& j) {
  PrismWitness w;
  w.a = triangle_from(j.at("triangle_a"));
  w.b = triangle_from(j.at("triangle_b"));
  for (int i = 0; i < 3; ++i) w.paths[i] = path_from(j.at("paths").at(i));
  return w;
}

PyramidWitness pyramid_from(const json& j) {
  PyramidWitness w;
  w.apex = j.at("apex").get<VertexId>();
  w.triangle = triangle_from(j.at("triangle"));
  for (int i = 0; i < 3; ++i) w.paths[i] = path_from(j.at("paths").at(i));
  return w;
}

LGK4Witness lgk4_from(const json& j) {
  LGK4Witness w;
  for (int x = 0; x < 4; ++x)
    for (int y = 0; y < 4; ++y) w.corners[x][y] = j.at("corners").at(x).at(y).get<VertexId>();
  for (const auto& r : j.at("rungs")) w.rungs.push_back(path_from(r));
  w.proper = j.at("proper").get<bool>();
  w.bipartite = j.at("bipartite").get<bool>();
  return w;
}

// Re-validate whatever witness the report carries against g; every detect and
// recognize report must survive this round trip.
void check_witness_json(const Graph& g, const json& w) {
  REQUIRE(w.is_object());
  const std::string kind = w.at("kind").get<std::string>();
  if (kind == "prism") {
    auto err = validate_prism(g, prism_from(w));
    if (err) CAPTURE(*err);
    CHECK_FALSE(err.has_value());
  } else if (kind == "pyramid") {
    auto err = validate_pyramid(g, pyramid_from(w));
    if (err) CAPTURE(*err);
    CHECK_FALSE(err.has_value());
  } else if (kind == "hole") {
    HoleWitness h{w.at("cycle").get<std::vector<VertexId>>()};
    CHECK_FALSE(validate_hole(g, h, 4).has_value());
  } else if (kind == "antihole") {
    AntiholeWitness a{w.at("cycle").get<std::vector<VertexId>>()};
    CHECK_FALSE(validate_antihole(g, a, 5).has_value());
  } else if (kind == "lg-subdivided-k4") {
    auto err = validate_lgk4(g, lgk4_from(w));
    if (err) CAPTURE(*err);
    CHECK_FALSE(err.has_value());
  } else {
    FAIL("unknown witness kind in report: " << kind);
  }
}

bool hex16(const std::string& s) {
  if (s.size() != 16) return false;
  for (char c : s)
    if (!std::isxdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

std::string q(const std::string& path) { return "\"" + path + "\""; }

}  // namespace

TEST_CASE("detect reports a found structure with a valid witness") {
  auto r = run_cli("detect even-prism " + q(fixtures().evenprism9));
  CHECK(r.code == 10);
  json j = parse_report(r);
  CHECK(j.at("command") == "detect");
  CHECK(j.at("kind") == "even-prism");
  CHECK(j.at("verdict") == "found");
  CHECK(j.at("exit") == 10);
  CHECK(j.at("input").at("order") == 9);
  CHECK(j.at("input").at("edges") == 12);
  CHECK(hex16(j.at("input").at("digest").get<std::string>()));
  CHECK(j.at("timings").at("parse_ms").get<double>() >= 0.0);
  CHECK(j.at("timings").at("run_ms").get<double>() >= 0.0);
  const json& w = j.at("witness");
  CHECK(w.at("kind") == "prism");
  CHECK(w.at("parity") == "even");
  CHECK(w.at("lengths") == json({2, 2, 2}));
  check_witness_json(make_evenprism9(), w);
}

TEST_CASE("detect reports absence") {
  auto r = run_cli("detect pyramid-or-prism " + q(fixtures().k4));
  CHECK(r.code == 11);
  json j = parse_report(r);
  CHECK(j.at("verdict") == "not-found");
  CHECK(j.at("witness").is_null());
  CHECK(j.at("exit") == 11);
}

TEST_CASE("exit codes per kind on fixed graphs") {
  struct Row {
    const char* kind;
    int code;
  };
  // C6 is itself a long hole; everything else is absent
  for (Row row : std::initializer_list<Row>{{"pyramid-or-prism", 11},
                                            {"pyramid-or-prism-fast", 11},
                                            {"long-hole", 10},
                                            {"long-antihole", 11},
                                            {"even-prism", 11},
                                            {"odd-prism", 11},
                                            {"lg-proper-k4", 11},
                                            {"lg-bipartite-k4", 11}}) {
    auto r = run_cli(std::string("detect ") + row.kind + " " + q(fixtures().c6));
    CAPTURE(std::string(row.kind));
    CHECK(r.code == row.code);
    json j = parse_report(r);
    if (r.code == 10)
      check_witness_json(make_cycle(6), j.at("witness"));
    else
      CHECK(j.at("witness").is_null());
  }
  // the prism: found by the structure detectors and the antihole search
  for (Row row : std::initializer_list<Row>{{"pyramid-or-prism", 10},
                                            {"pyramid-or-prism-fast", 10},
                                            {"long-hole", 11},
                                            {"long-antihole", 10},
                                            {"even-prism", 11},
                                            {"odd-prism", 10},
                                            {"lg-proper-k4", 11},
                                            {"lg-bipartite-k4", 11}}) {
    auto r = run_cli(std::string("detect ") + row.kind + " " + q(fixtures().prism6));
    CAPTURE(std::string(row.kind));
    CHECK(r.code == row.code);
    json j = parse_report(r);
    if (r.code == 10) check_witness_json(make_prism6(), j.at("witness"));
  }
}

TEST_CASE("detect honours checked preconditions") {
  auto r = run_cli("detect odd-prism " + q(fixtures().c5) + " --checked");
  CHECK(r.code == 3);
  json j = parse_report(r);
  CHECK(j.at("error").at("type") == "precondition");
  CHECK(j.at("error").at("detail") == "0 1 2 3 4");
}

TEST_CASE("long hole report round trips") {
  auto r = run_cli("detect long-hole " + q(fixtures().c7));
  CHECK(r.code == 10);
  json j = parse_report(r);
  const json& w = j.at("witness");
  CHECK(w.at("kind") == "hole");
  CHECK(w.at("length") == 7);
  CHECK(w.at("odd") == true);
  check_witness_json(make_cycle(7), w);
}

TEST_CASE("long antihole report round trips") {
  auto r = run_cli("detect long-antihole " + q(fixtures().prism6));
  CHECK(r.code == 10);
  json j = parse_report(r);
  CHECK(j.at("witness").at("kind") == "antihole");
  CHECK(j.at("witness").at("length") == 6);
  check_witness_json(make_prism6(), j.at("witness"));
}

TEST_CASE("fast detector reports its stage") {
  auto r = run_cli("detect pyramid-or-prism-fast " + q(fixtures().prism6));
  CHECK(r.code == 10);
  json j = parse_report(r);
  CHECK(j.at("stage") == "step1");
  CHECK(j.at("triangle") == json({0, 1, 2}));
  check_witness_json(make_prism6(), j.at("witness"));
}

TEST_CASE("line graph detection from an edge list file") {
  auto r = run_cli("detect lg-proper-k4 " + q(fixtures().lg_ones));
  CHECK(r.code == 10);
  json j = parse_report(r);
  const json& w = j.at("witness");
  CHECK(w.at("kind") == "lg-subdivided-k4");
  CHECK(w.at("proper") == true);
  CHECK(w.at("bipartite") == true);
  check_witness_json(build_lg_subdivided_k4({1, 1, 1, 1, 1, 1}).graph, w);
}

TEST_CASE("oracle cross checks agree") {
  auto found = run_cli("detect even-prism " + q(fixtures().evenprism9) + " --oracle");
  CHECK(found.code == 10);
  json jf = parse_report(found);
  CHECK(jf.at("oracle").at("verdict") == "found");
  CHECK(jf.at("oracle").at("agrees") == true);
  check_witness_json(make_evenprism9(), jf.at("oracle").at("witness"));

  auto absent = run_cli("detect pyramid-or-prism " + q(fixtures().c6) + " --oracle");
  CHECK(absent.code == 11);
  json ja = parse_report(absent);
  CHECK(ja.at("oracle").at("verdict") == "not-found");
  CHECK(ja.at("oracle").at("agrees") == true);
}

TEST_CASE("budget flag and environment variable") {
  // the environment variable caps the oracle enumeration
  auto starved = run_cli("detect long-hole " + q(fixtures().c7) + " --oracle", {},
                         "PRISMATIC_BUDGET=1");
  CHECK(starved.code == 4);
  json js = parse_report(starved);
  CHECK(js.at("error").at("type") == "budget");

  // an explicit flag beats the environment
  auto fed = run_cli("detect long-hole " + q(fixtures().c7) + " --oracle --budget 10000000",
                     {}, "PRISMATIC_BUDGET=1");
  CHECK(fed.code == 10);
  CHECK(parse_report(fed).at("oracle").at("agrees") == true);

  // a starved precondition check also maps to the budget exit
  auto precond = run_cli("detect odd-prism " + q(fixtures().c6) + " --checked --budget 1");
  CHECK(precond.code == 4);
}

TEST_CASE("reading the graph from stdin") {
  auto r = run_cli("detect even-prism -", format_edge_list(make_evenprism9()));
  CHECK(r.code == 10);
  json j = parse_report(r);
  CHECK(j.at("input").at("order") == 9);
  check_witness_json(make_evenprism9(), j.at("witness"));
}

TEST_CASE("recognition follows the pipeline order") {
  // the prism is the complement of C6, so the antihole stage rejects first
  auto prism = run_cli("recognize A " + q(fixtures().prism6));
  CHECK(prism.code == 11);
  json jp = parse_report(prism);
  CHECK(jp.at("class") == "A");
  CHECK(jp.at("verdict") == "non-member");
  CHECK(jp.at("stage") == 1);
  CHECK(jp.at("stage_name") == "antihole");
  CHECK(jp.at("certificate_kind") == "antihole");
  CHECK(jp.at("certificate").at("length") == 6);
  check_witness_json(make_prism6(), jp.at("certificate"));

  // the antihole-free even prism reaches the structure stage
  auto even = run_cli("recognize A " + q(fixtures().evenprism9));
  CHECK(even.code == 11);
  json je = parse_report(even);
  CHECK(je.at("stage") == 2);
  CHECK(je.at("certificate_kind") == "prism");
  check_witness_json(make_evenprism9(), je.at("certificate"));

  // and is a member of the weaker class
  auto member = run_cli("recognize A-prime " + q(fixtures().evenprism9));
  CHECK(member.code == 10);
  json jm = parse_report(member);
  CHECK(jm.at("verdict") == "member");
  CHECK(jm.at("stage") == 0);
  CHECK(jm.at("certificate").is_null());

  // the canonical primed spelling works too
  auto primed = run_cli("recognize \"A'\" " + q(fixtures().c6));
  CHECK(primed.code == 10);

  auto c6 = run_cli("recognize A " + q(fixtures().c6));
  CHECK(c6.code == 10);
  CHECK(parse_report(c6).at("verdict") == "member");

  auto c7 = run_cli("recognize A " + q(fixtures().c7));
  CHECK(c7.code == 11);
  json j7 = parse_report(c7);
  CHECK(j7.at("stage") == 3);
  CHECK(j7.at("certificate_kind") == "odd-hole");
  check_witness_json(make_cycle(7), j7.at("certificate"));
}

TEST_CASE("coloring a member") {
  auto r = run_cli("color " + q(fixtures().c6));
  CHECK(r.code == 0);
  json j = parse_report(r);
  CHECK(j.at("palette") == 2);
  CHECK(j.at("trace").size() == 4);
  auto colors = j.at("colors").get<std::vector<int>>();
  Graph g = make_cycle(6);
  REQUIRE(static_cast<int>(colors.size()) == g.order());
  for (auto [u, v] : g.edges()) CHECK(colors[u] != colors[v]);
}

TEST_CASE("coloring refuses a non-member") {
  auto r = run_cli("color " + q(fixtures().c5));
  CHECK(r.code == 3);
  json j = parse_report(r);
  CHECK(j.at("error").at("type") == "precondition");
}

TEST_CASE("reduce writes the variant files") {
  Fixtures& fx = fixtures();
  std::string prefix = fx.dir + "/pi-c6-prism";
  auto r = run_cli("reduce prism " + q(fx.pi_c6) + " --a 0 --b 3 --output " + q(prefix));
  CHECK(r.code == 0);
  json j = parse_report(r);
  CHECK(j.at("source").at("format") == "graph");
  CHECK(j.at("source").at("a") == 0);
  CHECK(j.at("source").at("b") == 3);
  REQUIRE(j.at("variants").size() == 1);
  CHECK(j.at("variants").at(0).at("order") == 14);

  // one graph6 line, and it parses back to the reported order
  std::istringstream g6(slurp(prefix + ".g6"));
  std::string line;
  REQUIRE(std::getline(g6, line));
  Graph back = parse_graph6(line);
  CHECK(back.order() == 14);
  CHECK(triangles(back).size() == 2);
  CHECK_FALSE(std::getline(g6, line));

  json names = json::parse(slurp(prefix + ".names.json"));
  REQUIRE(names.is_array());
  REQUIRE(names.size() == 1);
  CHECK(names.at(0).at("vertices").size() == 14);

  // the reduction preserves the answer: C6 has a hole through 0 and 3
  CHECK(oracle_find(back, OracleKind::PrismAny).has_value());
}

TEST_CASE("reduce picks the distinguished pair when unspecified") {
  Fixtures& fx = fixtures();
  std::string prefix = fx.dir + "/pi-c6-auto";
  auto r = run_cli("reduce prism " + q(fx.pi_c6) + " --output " + q(prefix));
  CHECK(r.code == 0);
  json j = parse_report(r);
  CHECK(j.at("source").at("a") == 0);
  CHECK(j.at("source").at("b") == 2);
  CHECK(j.at("variants").at(0).at("order") == 14);
}

TEST_CASE("reduce from a formula emits all parity variants") {
  Fixtures& fx = fixtures();
  std::string prefix = fx.dir + "/one-clause-odd-prism";
  auto r = run_cli("reduce odd-prism " + q(fx.cnf) + " --output " + q(prefix));
  CHECK(r.code == 0);
  json j = parse_report(r);
  CHECK(j.at("source").at("format") == "dimacs-cnf");
  CHECK(j.at("source").at("variables") == 3);
  CHECK(j.at("source").at("clauses") == 1);
  CHECK(j.at("instance").at("order") == 31);
  REQUIRE(j.at("variants").size() == 8);

  std::istringstream g6(slurp(prefix + ".g6"));
  std::string line;
  int lines = 0;
  while (std::getline(g6, line))
    if (!line.empty()) {
      Graph back = parse_graph6(line);
      CHECK(back.order() == j.at("variants").at(lines).at("order").get<int>());
      ++lines;
    }
  CHECK(lines == 8);

  json names = json::parse(slurp(prefix + ".names.json"));
  CHECK(names.size() == 8);
}

TEST_CASE("reduce refuses a graph without a usable pair") {
  auto r = run_cli("reduce prism " + q(fixtures().k4));
  CHECK(r.code == 3);
  json j = parse_report(r);
  CHECK(j.at("error").at("type") == "precondition");
}

TEST_CASE("verify runs a criterion and reports it") {
  Fixtures& fx = fixtures();
  std::string report = fx.dir + "/verify3.json";
  auto r = run_cli("verify 3 --seed 1729 --jobs 1 --report " + q(report));
  CHECK(r.code == 0);
  CHECK(r.out.find("criterion 3") != std::string::npos);
  CHECK(r.out.find(": PASS") != std::string::npos);
  CHECK(r.out.find("1/1 criteria passed") != std::string::npos);

  json j = json::parse(slurp(report));
  CHECK(j.at("command") == "verify");
  REQUIRE(j.at("criteria").size() == 1);
  CHECK(j.at("criteria").at(0).at("index") == 3);
  CHECK(j.at("criteria").at(0).at("pass") == true);
  CHECK(j.at("failures") == 0);
  CHECK(j.at("exit") == 0);

  // criteria can also be addressed by name
  auto named = run_cli("verify " + j.at("criteria").at(0).at("name").get<std::string>());
  CHECK(named.code == 0);
  CHECK(named.out.find("criterion 3") != std::string::npos);
}

TEST_CASE("report files mirror stdout") {
  Fixtures& fx = fixtures();
  std::string report = fx.dir + "/detect-report.json";
  auto r = run_cli("detect even-prism " + q(fx.evenprism9) + " --report " + q(report));
  CHECK(r.code == 10);
  CHECK(json::parse(slurp(report)) == parse_report(r));
}

TEST_CASE("bad invocations are input errors") {
  CHECK(run_cli("detect no-such-kind " + q(fixtures().c6)).code == 2);
  CHECK(run_cli("recognize B " + q(fixtures().c6)).code == 2);
  CHECK(run_cli("reduce nothing " + q(fixtures().pi_c6)).code == 2);
  CHECK(run_cli("verify nonsense").code == 2);
  CHECK(run_cli("verify 12").code == 2);
  CHECK(run_cli("detect even-prism /no/such/file").code == 2);
  CHECK(run_cli("detect even-prism -", "###\n").code == 2);
  CHECK(run_cli("detect even-prism -", "3 2\n0 1\n").code == 2);  // truncated edge list
  CHECK(run_cli("detect").code == 2);          // missing required arguments
  CHECK(run_cli("").code == 2);                // missing subcommand
  CHECK(run_cli("detect odd-prism " + q(fixtures().c6) + " --checked --unchecked").code == 2);
  CHECK(run_cli("--help").code == 0);
}
