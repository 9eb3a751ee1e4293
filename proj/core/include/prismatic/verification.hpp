#ifndef PRISMATIC_VERIFICATION_HPP
#define PRISMATIC_VERIFICATION_HPP

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "prismatic/errors.hpp"
#include "prismatic/graph.hpp"

namespace prismatic {

// ---- deterministic corpus generators ----

Graph random_gnp(int n, double p, std::mt19937_64& rng);
Graph random_bipartite(int left, int right, double p, std::mt19937_64& rng);
// Random interval graph (always chordal).
Graph random_interval(int n, std::mt19937_64& rng);

// ---- small named fixtures ----

Graph make_cycle(int n);
Graph make_path(int n);
Graph make_complete(int n);
Graph make_prism6();        // two triangles joined by three edges
Graph make_evenprism9();    // two triangles joined by three two-edge paths
Graph make_pyramid6();      // apex 0, triangle {1,2,3}, arm lengths 1,2,2
Graph make_pyramid7_balanced();    // arm lengths 2,2,2
Graph make_pyramid7_unbalanced();  // arm lengths 1,3,2
Graph make_petersen();

// All non-isomorphic simple graphs on exactly n vertices, 1 <= n <= 7,
// computed once per process.  Sizes: 1, 2, 4, 11, 34, 156, 1044.
const std::vector<Graph>& nonisomorphic_catalog(int n);

// ---- acceptance criteria ----

struct VerifyOptions {
  std::uint64_t seed = 1729;
  int jobs = 0;  // 0 = hardware concurrency
  std::uint64_t budget = kDefaultBudget;
};

struct CriterionResult {
  int index = 0;
  std::string name;
  bool pass = false;
  std::string detail;
};

// Names of the nine acceptance criteria, indexed 1..9 (element 0 unused).
const std::vector<std::string>& criterion_names();

CriterionResult run_criterion(int index, const VerifyOptions& opts = {});
std::vector<CriterionResult> run_all_criteria(const VerifyOptions& opts = {});

}  // namespace prismatic

#endif
