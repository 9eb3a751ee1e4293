#ifndef PRISMATIC_RECOGNIZE_HPP
#define PRISMATIC_RECOGNIZE_HPP

#include <cstdint>
#include <optional>
#include <string>

#include "prismatic/errors.hpp"
#include "prismatic/graph.hpp"
#include "prismatic/structures.hpp"

namespace prismatic {

// The two graph classes this library recognizes.  Both exclude odd holes and
// antiholes of length at least 5; A additionally excludes every prism, APrime
// only odd prisms.
enum class GraphClass { A, APrime };

const char* graph_class_name(GraphClass c);

struct RecognitionReport {
  GraphClass queried = GraphClass::A;
  bool member = false;
  // 0 when member; otherwise the 1-based pipeline stage that rejected.
  int stage = 0;
  std::string stage_name;

  // At most one certificate is set, matching the rejecting stage.
  std::optional<AntiholeWitness> antihole;      // long-antihole stage
  std::optional<StructureWitness> structure;    // pyramid/prism stage (class A)
  std::optional<HoleWitness> odd_hole;          // Berge stage
  std::optional<AntiholeWitness> odd_antihole;  // Berge stage
  std::optional<PrismWitness> odd_prism;        // odd-prism stage (class APrime)

  // "antihole", "prism", "pyramid", "odd-hole", "odd-antihole", "odd-prism",
  // or "" for a member.
  std::string certificate_kind() const;
};

// Pipeline: long antihole, then pyramid-or-prism (witness via the quadruple
// scan), then the desk Berge oracle.  Member iff all three come back negative;
// the certificate comes from the earliest failing stage.
RecognitionReport recognize_class_a(const Graph& g, std::uint64_t budget = kDefaultBudget);

// Pipeline: long antihole, then the desk Berge oracle, then the odd-prism
// detector (whose no-odd-hole precondition the Berge stage has established).
RecognitionReport recognize_class_a_prime(const Graph& g, std::uint64_t budget = kDefaultBudget);

}  // namespace prismatic

#endif
