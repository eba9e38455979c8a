#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace polycell {

struct InstanceResult {
  std::string name;
  bool pass = false;
  std::string detail;  // value summary; on failure, the reproduction payload
};

// One suite run. render() is deterministic for a fixed suite/seed/trials/
// budget; wall_ms is measured by the caller and never rendered, so identical
// invocations produce byte-identical reports.
struct VerificationReport {
  std::string suite;
  std::uint64_t seed = 0;
  int trials = 0;
  std::string note;  // extra header line, e.g. the conjecture size bound
  std::vector<InstanceResult> instances;
  long long wall_ms = 0;

  bool passed() const;
  std::string render() const;
};

// Suites: e8 (links of products), e9 (flag-transitivity of products),
// bf (component counts), e3a (hom counting), g3 (graph prime factorization),
// g11 (complex prime factorization), g12 (product automorphisms),
// h2 (even-cycle product components), h6 (face blocks), h8 (block
// incidence), blockgraph (block graph Cartesian structure).
VerificationReport run_suite(const std::string& id, std::uint64_t seed, int trials,
                             std::uint64_t budget);

std::vector<std::string> suite_names();

struct ConjectureOutcome {
  VerificationReport report;
  // Self-contained document of the offending component when a counterexample
  // is found; absent otherwise.
  std::optional<std::string> counterexample;
};

// Bounded counterexample search. Ids: h11 (bipartite-skeleton factors) and
// h12 (surface-structure factors). The factor pool is every constructible
// elementary ordinary complex with faces of length exactly 6 on at most 24
// skeleton vertices; instances are multisets of 2 or 3 factors. Components
// larger than max_size vertices are reported as skipped, never silently
// dropped.
ConjectureOutcome run_conjecture(const std::string& id, std::uint64_t seed, int max_size,
                                 std::uint64_t budget);

std::vector<std::string> conjecture_names();

}  // namespace polycell
