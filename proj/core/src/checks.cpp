#include "ncfact/checks.hpp"

#include <chrono>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "ncfact/complexes.hpp"
#include "ncfact/ncs.hpp"
#include "ncfact/top_poset.hpp"

namespace ncfact {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

template <typename T>
std::string show(const std::vector<T>& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ',';
    os << v[i];
  }
  os << ')';
  return os.str();
}

void expect_eq_counts(SuiteResult& suite, const std::string& name,
                      const std::vector<long long>& got, const std::vector<long long>& want) {
  suite.checks.push_back({name, got == want, "got " + show(got) + ", want " + show(want)});
}

void expect(SuiteResult& suite, const std::string& name, bool pass, const std::string& detail = "") {
  suite.checks.push_back({name, pass, detail});
}

long long catalan_by_recurrence(int n) {
  std::vector<long long> c(static_cast<std::size_t>(n) + 1, 0);
  c[0] = 1;
  for (int m = 1; m <= n; ++m) {
    for (int i = 0; i < m; ++i) {
      c[static_cast<std::size_t>(m)] +=
          c[static_cast<std::size_t>(i)] * c[static_cast<std::size_t>(m - 1 - i)];
    }
  }
  return c[static_cast<std::size_t>(n)];
}

/// Maximal chains of a bounded graded poset: cover paths bottom to top.
template <MarkedGroup G>
long long maximal_chain_count(const IntervalPoset<G>& poset) {
  std::vector<long long> ways(static_cast<std::size_t>(poset.size()), 0);
  ways[0] = 1;
  for (const auto& [lo, hi] : poset.covers) {
    ways[static_cast<std::size_t>(hi)] += ways[static_cast<std::size_t>(lo)];
  }
  return ways[static_cast<std::size_t>(poset.size() - 1)];
}

NCSPartition figure_partition() {
  return make_ncs_partition(
      12, {{parse_rational("1/10"), SetPartition(12, {{4, 5}})},
           {parse_rational("2/5"), SetPartition(12, {{1, 2, 3, 11}})},
           {parse_rational("1/2"), SetPartition(12, {{3, 6, 8}, {11, 12}})},
           {parse_rational("9/10"), SetPartition(12, {{8, 9, 10}})}});
}

std::uint64_t draw(std::mt19937_64& rng, std::uint64_t n) { return detail::bounded_uint(rng, n); }

}  // namespace

SuiteResult run_paper_counts() {
  SuiteResult suite{"paper-counts", 0, 1.0, {}};
  auto start = Clock::now();

  SymmetricGroup sym3(3);
  IntegerGroup ints;
  auto d3 = delta(3);

  expect(suite, "interval-sym3-size", interval(sym3, d3).size() == 5, "5 noncrossing permutations");

  auto linear = enumerate_linear(sym3, d3);
  expect_eq_counts(suite, "fact-sym3-linear-ranks",
                   {linear.rank_counts.begin(), linear.rank_counts.end()}, {5, 7, 3});
  expect(suite, "fact-sym3-linear-size", linear.size() == 15, "15 linear factorizations");

  auto circular = enumerate_circular(sym3, linear);
  expect(suite, "fact-sym3-circular-size", circular.size() == 8, "8 circular classes");

  auto comp_linear = enumerate_linear(ints, 2LL);
  expect(suite, "comp-z2-linear-size", comp_linear.size() == 7, "7 linear compositions");
  auto comp_circular = enumerate_circular(ints, comp_linear);
  expect(suite, "comp-z2-circular-size", comp_circular.size() == 4, "4 circular compositions");

  auto order = build_order_complex(sym3, d3);
  expect_eq_counts(suite, "order-complex-sym3-cells", order.summary.dims, {5, 7, 3});

  auto intervalc = build_interval_complex(sym3, d3);
  expect_eq_counts(suite, "interval-complex-sym3-cells", intervalc.summary.dims, {1, 4, 3});
  expect(suite, "interval-complex-sym3-euler", intervalc.summary.euler == 0, "chi = 0");

  suite.seconds = seconds_since(start);
  return suite;
}

SuiteResult run_catalan() {
  SuiteResult suite{"catalan", 0, 30.0, {}};
  auto start = Clock::now();

  for (int d = 2; d <= 6; ++d) {
    SymmetricGroup sym(d);
    auto poset = interval(sym, delta(d));
    std::ostringstream name;
    name << "interval-size-d" << d;
    expect(suite, name.str(), poset.size() == catalan_by_recurrence(d),
           std::to_string(poset.size()) + " vs C_" + std::to_string(d) + " = " +
               std::to_string(catalan_by_recurrence(d)));
  }

  for (int d = 2; d <= 5; ++d) {
    SymmetricGroup sym(d);
    auto complex = build_interval_complex(sym, delta(d));
    if (d >= 3) {
      long long chains = maximal_chain_count(interval(sym, delta(d)));
      std::ostringstream name;
      name << "top-cells-d" << d;
      expect(suite, name.str(), complex.summary.dims.back() == chains,
             std::to_string(complex.summary.dims.back()) + " top cells vs " +
                 std::to_string(chains) + " maximal chains");
    }
    std::ostringstream name;
    name << "euler-zero-d" << d;
    expect(suite, name.str(), complex.summary.euler == 0,
           "chi = " + std::to_string(complex.summary.euler));
  }

  // frozen regression pins for the larger interval complexes
  expect_eq_counts(suite, "interval-complex-cells-d4",
                   build_interval_complex(SymmetricGroup(4), delta(4)).summary.dims,
                   {1, 13, 28, 16});
  expect_eq_counts(suite, "interval-complex-cells-d5",
                   build_interval_complex(SymmetricGroup(5), delta(5)).summary.dims,
                   {1, 41, 190, 275, 125});

  suite.seconds = seconds_since(start);
  return suite;
}

SuiteResult run_armstrong(std::uint64_t seed) {
  SuiteResult suite{"armstrong", 0, 10.0, {}};
  auto start = Clock::now();

  SymmetricGroup sym3(3);
  auto divisors3 = interval(sym3, delta(3)).elements;
  long long cases = 0, agreements = 0;
  std::vector<std::vector<Permutation>> tuples;
  for (const auto& x : divisors3) tuples.push_back({x});
  for (const auto& x : divisors3) {
    for (const auto& y : divisors3) tuples.push_back({x, y});
  }
  for (const auto& x : divisors3) {
    for (const auto& y : divisors3) {
      for (const auto& z : divisors3) tuples.push_back({x, y, z});
    }
  }
  for (const auto& tuple : tuples) {
    auto [lhs, rhs] = armstrong_check(sym3, tuple);
    ++cases;
    if (lhs == rhs) ++agreements;
  }
  expect(suite, "exhaustive-d3", cases == agreements,
         std::to_string(agreements) + "/" + std::to_string(cases) + " tuples agree");

  SymmetricGroup sym4(4);
  auto divisors4 = interval(sym4, delta(4)).elements;
  std::mt19937_64 rng(seed);
  cases = agreements = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    int k = 1 + static_cast<int>(draw(rng, 3));
    std::vector<Permutation> tuple;
    for (int j = 0; j < k; ++j) tuple.push_back(divisors4[draw(rng, divisors4.size())]);
    auto [lhs, rhs] = armstrong_check(sym4, tuple);
    ++cases;
    if (lhs == rhs) ++agreements;
  }
  expect(suite, "seeded-d4", cases == agreements,
         std::to_string(agreements) + "/" + std::to_string(cases) + " tuples agree");

  suite.seconds = seconds_since(start);
  return suite;
}

namespace {

/// phi/phi_inv round trips plus order preservation, exhaustive over every
/// point family on the 4-point support {0, 1/3, 2/3, 1}.
void check_phi_exhaustive(SuiteResult& suite, int degree) {
  SymmetricGroup sym(degree);
  auto points = enumerate_points_on_support(sym, delta(degree),
                                            {parse_rational("1/3"), parse_rational("2/3")});
  const int n = static_cast<int>(points.size());
  std::vector<std::vector<bool>> below(static_cast<std::size_t>(n),
                                       std::vector<bool>(static_cast<std::size_t>(n), false));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      below[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          subfact_leq(sym, points[static_cast<std::size_t>(i)], points[static_cast<std::size_t>(j)]);
    }
  }
  bool round_trips = true, ranks_shift = true, order_iso = true;
  for (int vi = 0; vi < n; ++vi) {
    const auto& v = points[static_cast<std::size_t>(vi)];
    std::vector<int> ups;
    std::vector<TopPoint<Permutation>> images;
    for (int ui = 0; ui < n; ++ui) {
      if (!below[static_cast<std::size_t>(vi)][static_cast<std::size_t>(ui)]) continue;
      const auto& u = points[static_cast<std::size_t>(ui)];
      auto w = upper_set_phi(sym, v, u);
      if (!(upper_set_phi_inv(sym, v, w) == u)) round_trips = false;
      if (rank_of(sym, w) != rank_of(sym, u) - rank_of(sym, v)) ranks_shift = false;
      ups.push_back(ui);
      images.push_back(std::move(w));
    }
    for (std::size_t a = 0; a < ups.size(); ++a) {
      for (std::size_t b = 0; b < ups.size(); ++b) {
        bool source = below[static_cast<std::size_t>(ups[a])][static_cast<std::size_t>(ups[b])];
        bool image = subfact_leq(sym, images[a], images[b]);
        if (source != image) order_iso = false;
      }
    }
  }
  std::string tag = "-sym" + std::to_string(degree);
  expect(suite, "phi-round-trip" + tag, round_trips,
         std::to_string(n) + " points on the fixed support");
  expect(suite, "phi-rank-shift" + tag, ranks_shift);
  expect(suite, "phi-order-iso" + tag, order_iso);
}

}  // namespace

SuiteResult run_top_poset(std::uint64_t seed) {
  SuiteResult suite{"top-poset", 0, 60.0, {}};
  auto start = Clock::now();

  // division order on seeded triples
  SymmetricGroup sym4(4);
  std::mt19937_64 rng(seed);
  bool division_ok = true;
  for (int trial = 0; trial < 1000; ++trial) {
    auto u = random_top_point(sym4, delta(4), rng);
    auto v = random_sub_point(sym4, u, rng);
    auto z = random_top_point(sym4, complement(sym4, v.wf.target, delta(4)), rng);
    auto w = upper_set_phi_inv(sym4, v, z);
    auto vu = make_top_point(
        sym4, delta(4),
        multiset_product(sym4, multiset_inverse(sym4, to_multiset(sym4, v)), to_multiset(sym4, u)));
    auto vw = make_top_point(
        sym4, delta(4),
        multiset_product(sym4, multiset_inverse(sym4, to_multiset(sym4, v)), to_multiset(sym4, w)));
    if (subfact_leq(sym4, u, w) != subfact_leq(sym4, vu, vw)) division_ok = false;
  }
  expect(suite, "division-order-1000-triples", division_ok);

  check_phi_exhaustive(suite, 3);
  check_phi_exhaustive(suite, 4);

  // lower sets against brute force on seeded points
  bool lower_ok = true;
  for (int trial = 0; trial < 100; ++trial) {
    auto u = random_top_point(sym4, delta(4), rng);
    auto lower = lower_set(sym4, u);
    std::uint64_t expected = 1;
    for (const auto& factor : lower.factors) expected *= static_cast<std::uint64_t>(factor.size());
    if (lower.points.size() != expected) lower_ok = false;
    std::vector<Rational> interior(u.wf.positions.begin() + 1, u.wf.positions.end() - 1);
    std::set<TopPoint<Permutation>> brute;
    for (const auto& p : enumerate_points_on_support(sym4, delta(4), interior)) {
      if (subfact_leq(sym4, p, u)) brute.insert(p);
    }
    if (brute.size() != lower.points.size()) lower_ok = false;
    for (const auto& p : lower.points) {
      if (!brute.count(p)) lower_ok = false;
    }
  }
  expect(suite, "lower-set-products-100-points", lower_ok);

  SymmetricGroup sym3(3);
  auto stratum = stratum_complex(sym3, delta(3), 1);
  expect_eq_counts(suite, "stratum-sym3-rank1-cells", stratum.summary.dims, {3, 3});
  expect(suite, "stratum-sym3-rank1-single-circle", stratum.components == 1,
         std::to_string(stratum.components) + " component");
  bool covers_ok = stratum.cover_degrees.size() == 3;
  for (const auto& [h, k] : stratum.cover_degrees) {
    if (k != 3) covers_ok = false;
  }
  expect(suite, "stratum-sym3-rank1-cover-degree", covers_ok, "k = 3 for each transposition");

  bool max_strata_ok = true;
  for (int d = 2; d <= 4; ++d) {
    SymmetricGroup sym(d);
    auto top = stratum_complex(sym, delta(d), sym.length(delta(d)));
    auto complex = build_interval_complex(sym, delta(d));
    if (top.summary.dims != complex.summary.dims || top.summary.labels != complex.summary.labels ||
        top.summary.faces != complex.summary.faces) {
      max_strata_ok = false;
    }
  }
  expect(suite, "maximal-stratum-equals-interval-complex", max_strata_ok, "d = 2..4");

  suite.seconds = seconds_since(start);
  return suite;
}

SuiteResult run_ncs(std::uint64_t seed) {
  SuiteResult suite{"ncs", 0, 60.0, {}};
  auto start = Clock::now();

  auto fig = figure_partition();
  long long nontrivial = 0;
  for (const auto& [pos, partition] : fig.support) {
    nontrivial += static_cast<long long>(partition.nontrivial_blocks().size());
  }
  expect(suite, "figure-valid", validate_ncs(fig) && validate_ncs_by_lifting(fig));
  expect(suite, "figure-blocks", nontrivial == 5, std::to_string(nontrivial) + " non-trivial blocks");
  expect(suite, "figure-criticality", total_criticality(fig) == 9,
         "criticality " + std::to_string(total_criticality(fig)));
  auto report = complementary_regions(fig);
  expect(suite, "figure-regions", report.count == 10 && report.tree.is_tree,
         std::to_string(report.count) + " regions");

  std::mt19937_64 rng(seed);
  bool bound_ok = true, region_ok = true;
  for (int trial = 0; trial < 10000; ++trial) {
    int d = 2 + static_cast<int>(draw(rng, 7));
    SymmetricGroup sym(d);
    auto p = random_ncs_partition(sym, rng);
    long crit = total_criticality(p);
    if (!(crit <= d - 1) || !validate_ncs(p)) bound_ok = false;
    auto r = complementary_regions(p);
    if (r.count != crit + 1 || !r.tree.is_tree) region_ok = false;
  }
  expect(suite, "criticality-bound-10000", bound_ok);
  expect(suite, "regions-equal-rank-plus-one-10000", region_ok);

  // isomorphism round trips and order preservation on seeded pairs
  bool round_ok = true, forward_ok = true, converse_ok = true;
  std::map<int, IntervalPoset<SymmetricGroup>> divisors;
  for (int trial = 0; trial < 700; ++trial) {
    int d = 3 + static_cast<int>(draw(rng, 6));  // 3..8
    SymmetricGroup sym(d);
    auto u = random_top_point(sym, delta(d), rng);
    auto v = random_sub_point(sym, u, rng);
    auto cu = circ_quotient(sym, u);
    auto cv = circ_quotient(sym, v);
    if (!(psi_big_inv(sym, psi_big(sym, cu)) == cu)) round_ok = false;
    if (!(psi_big_inv(sym, psi_big(sym, cv)) == cv)) round_ok = false;
    if (!refinement_leq(psi_big(sym, cv), psi_big(sym, cu))) forward_ok = false;
  }
  for (int trial = 0; trial < 300; ++trial) {
    int d = 3 + static_cast<int>(draw(rng, 3));  // 3..5
    SymmetricGroup sym(d);
    if (!divisors.count(d)) divisors.emplace(d, interval(sym, delta(d)));
    auto a = circ_quotient(sym, random_top_point(sym, delta(d), rng));
    auto b = circ_quotient(sym, random_top_point(sym, delta(d), rng));
    if (refinement_leq(psi_big(sym, a), psi_big(sym, b)) != class_leq(sym, a, b, divisors.at(d))) {
      converse_ok = false;
    }
  }
  expect(suite, "psi-round-trip-1000-pairs", round_ok);
  expect(suite, "psi-order-preserving", forward_ok);
  expect(suite, "psi-order-reflecting", converse_ok);

  suite.seconds = seconds_since(start);
  return suite;
}

SuiteResult run_psi(std::uint64_t seed) {
  SuiteResult suite{"psi", 0, 60.0, {}};
  auto start = Clock::now();
  std::mt19937_64 rng(seed);
  bool ok = true;
  for (int trial = 0; trial < 1000; ++trial) {
    int d = 3 + static_cast<int>(draw(rng, 6));
    SymmetricGroup sym(d);
    auto c = circ_quotient(sym, random_top_point(sym, delta(d), rng));
    if (!(psi_big_inv(sym, psi_big(sym, c)) == c)) ok = false;
  }
  expect(suite, "psi-round-trip-1000", ok);
  suite.seconds = seconds_since(start);
  return suite;
}

std::vector<SuiteResult> run_all_suites(std::uint64_t seed) {
  return {run_paper_counts(), run_catalan(), run_armstrong(seed),
          run_top_poset(seed), run_ncs(seed)};
}

bool print_suites(const std::vector<SuiteResult>& suites, std::string& out) {
  std::ostringstream os;
  bool all = true;
  for (const auto& suite : suites) {
    for (const auto& check : suite.checks) {
      os << (check.pass ? "[PASS] " : "[FAIL] ") << suite.name << '.' << check.name;
      if (!check.detail.empty()) os << "  (" << check.detail << ")";
      os << "\n";
      all = all && check.pass;
    }
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.3f", suite.seconds);
    bool in_budget = suite.budget_seconds <= 0 || suite.seconds < suite.budget_seconds;
    os << (in_budget ? "[PASS] " : "[FAIL] ") << suite.name << ".time  (" << buf << " s < "
       << suite.budget_seconds << " s)\n";
    all = all && in_budget;
  }
  os << (all ? "all checks passed" : "CHECK FAILURES") << "\n";
  out = os.str();
  return all;
}

}  // namespace ncfact
