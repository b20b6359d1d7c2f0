#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace ncfact {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct SuiteResult {
  std::string name;
  double seconds = 0;
  double budget_seconds = 0;
  std::vector<CheckResult> checks;

  bool passed() const {
    if (budget_seconds > 0 && seconds >= budget_seconds) return false;
    for (const auto& c : checks) {
      if (!c.pass) return false;
    }
    return true;
  }
};

/// Exact count suite: the Sym_3 and Z fixtures.
SuiteResult run_paper_counts();
/// Interval sizes against the Catalan recurrence (d <= 6), top cells of the
/// interval complexes against brute-force maximal-chain counts (d = 3..5),
/// Euler characteristic zero (d = 2..5).
SuiteResult run_catalan();
/// Both sides of the shuffle equivalence: exhaustive for d = 3, k <= 3, and
/// 1000 seeded tuples for d = 4.
SuiteResult run_armstrong(std::uint64_t seed);
/// Division order, upper-set isomorphism, lower-set products, strata.
SuiteResult run_top_poset(std::uint64_t seed);
/// Degree-d circle partitions: the fixture, the rank bound, the region
/// identity, and the positionwise orbit-map isomorphism.
SuiteResult run_ncs(std::uint64_t seed);
/// Round-trip subset of the isomorphism checks.
SuiteResult run_psi(std::uint64_t seed);

std::vector<SuiteResult> run_all_suites(std::uint64_t seed);

/// "[PASS] name ..." lines plus a summary; returns overall success.
bool print_suites(const std::vector<SuiteResult>& suites, std::string& out);

}  // namespace ncfact
