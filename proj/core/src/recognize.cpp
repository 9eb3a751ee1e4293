#include "prismatic/recognize.hpp"

#include "prismatic/holes.hpp"
#include "prismatic/parity.hpp"
#include "prismatic/prism_pyramid.hpp"

namespace prismatic {

const char* graph_class_name(GraphClass c) {
  return c == GraphClass::A ? "A" : "A-prime";
}

std::string RecognitionReport::certificate_kind() const {
  if (antihole) return "antihole";
  if (structure) return structure->is_prism() ? "prism" : "pyramid";
  if (odd_hole) return "odd-hole";
  if (odd_antihole) return "odd-antihole";
  if (odd_prism) return "odd-prism";
  return "";
}

namespace {

bool berge_stage(const Graph& g, std::uint64_t budget, int stage, RecognitionReport& rep) {
  BergeCertificate cert;
  try {
    cert = is_berge_desk(g, budget);
  } catch (const BudgetExceeded& e) {
    throw BudgetExceeded(std::string("Berge stage of class recognition: ") + e.what());
  }
  if (cert.berge) return true;
  rep.stage = stage;
  rep.stage_name = "berge";
  rep.odd_hole = cert.odd_hole;
  rep.odd_antihole = cert.odd_antihole;
  return false;
}

}  // namespace

RecognitionReport recognize_class_a(const Graph& g, std::uint64_t budget) {
  RecognitionReport rep;
  rep.queried = GraphClass::A;

  if (auto ah = find_long_antihole(g)) {
    rep.stage = 1;
    rep.stage_name = "antihole";
    rep.antihole = *ah;
    return rep;
  }
  auto v2 = detect_pyramid_or_prism_v2(g, /*want_witness=*/true);
  if (v2.found) {
    rep.stage = 2;
    rep.stage_name = "structure";
    rep.structure = v2.witness;
    return rep;
  }
  if (!berge_stage(g, budget, 3, rep)) return rep;

  rep.member = true;
  return rep;
}

RecognitionReport recognize_class_a_prime(const Graph& g, std::uint64_t budget) {
  RecognitionReport rep;
  rep.queried = GraphClass::APrime;

  if (auto ah = find_long_antihole(g)) {
    rep.stage = 1;
    rep.stage_name = "antihole";
    rep.antihole = *ah;
    return rep;
  }
  if (!berge_stage(g, budget, 2, rep)) return rep;

  DetectOptions opts;
  opts.mode = PrecondMode::Unchecked;  // the Berge stage just ruled out odd holes
  if (auto pw = detect_odd_prism(g, opts)) {
    rep.stage = 3;
    rep.stage_name = "odd-prism";
    rep.odd_prism = *pw;
    return rep;
  }

  rep.member = true;
  return rep;
}

}  // namespace prismatic
