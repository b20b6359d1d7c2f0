#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ncfact/ncs.hpp"
#include "test_util.hpp"

using namespace ncfact;
using namespace ncfact::test;

namespace {

Rational rat(const char* text) { return parse_rational(text); }

/// The degree-12 partition with five non-trivial blocks used as the running
/// fixture: {4,5} at 1/10, {1,2,3,11} at 2/5, {3,6,8} and {11,12} at 1/2,
/// {8,9,10} at 9/10.
NCSPartition figure_partition() {
  return make_ncs_partition(
      12, {{rat("1/10"), SetPartition(12, {{4, 5}})},
           {rat("2/5"), SetPartition(12, {{1, 2, 3, 11}})},
           {rat("1/2"), SetPartition(12, {{3, 6, 8}, {11, 12}})},
           {rat("9/10"), SetPartition(12, {{8, 9, 10}})}});
}

}  // namespace

TEST_CASE("noncrossing test on four points") {
  CHECK_FALSE(is_noncrossing(SetPartition(4, {{1, 3}, {2, 4}})));
  CHECK(is_noncrossing(SetPartition(4, {{1, 2}, {3, 4}})));
  CHECK(is_noncrossing(SetPartition(4, {{1, 4}, {2, 3}})));

  int count = 0;
  for (const auto& partition : all_set_partitions(4)) {
    if (is_noncrossing(partition)) ++count;
  }
  CHECK(count == 14);
  CHECK(catalan(4) == 14);
}

TEST_CASE("shuffle partitions interleave along residues") {
  SetPartition whole(2, {{1, 2}});
  SetPartition split(2);
  CHECK(shuffle({whole}) == whole);  // k = 1 re-indexing is the identity
  CHECK(shuffle({whole, split}) == SetPartition(4, {{1, 3}, {2}, {4}}));

  CHECK_THROWS_AS(unshuffle(SetPartition(4, {{1, 2}}), 2), DomainError);
}

TEST_CASE("unshuffle inverts shuffle on random tuples") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    int d = 2 + static_cast<int>(bounded(rng, 3));
    int k = 1 + static_cast<int>(bounded(rng, 3));
    auto pool = all_set_partitions(d);
    std::vector<SetPartition> tuple;
    for (int j = 0; j < k; ++j) tuple.push_back(pool[bounded(rng, pool.size())]);
    auto shuffled = shuffle(tuple);
    CHECK(shuffled.ground_size() == d * k);
    CHECK(unshuffle(shuffled, k) == tuple);
  }
}

TEST_CASE("armstrong equivalence on worked cases") {
  SymmetricGroup sym(3);
  auto a = parse_cycles(3, "(1 2)");
  auto b = parse_cycles(3, "(2 3)");
  CHECK(armstrong_check(sym, {a, b}) == std::pair<bool, bool>{true, true});
  CHECK(armstrong_check(sym, {a, a}) == std::pair<bool, bool>{false, false});
  for (const auto& x : interval(sym, delta(3)).elements) {
    CHECK(armstrong_check(sym, {x}) == std::pair<bool, bool>{true, true});
  }
}

TEST_CASE("armstrong equivalence holds exhaustively for d = 3, k <= 3") {
  SymmetricGroup sym(3);
  auto divisors = interval(sym, delta(3)).elements;
  std::vector<std::vector<Permutation>> tuples;
  for (const auto& x : divisors) tuples.push_back({x});
  for (const auto& x : divisors) {
    for (const auto& y : divisors) tuples.push_back({x, y});
  }
  for (const auto& x : divisors) {
    for (const auto& y : divisors) {
      for (const auto& z : divisors) tuples.push_back({x, y, z});
    }
  }
  CHECK(tuples.size() == 5 + 25 + 125);
  for (const auto& tuple : tuples) {
    auto [lhs, rhs] = armstrong_check(sym, tuple);
    CHECK(lhs == rhs);
  }
}

TEST_CASE("armstrong equivalence on seeded Sym_4 tuples") {
  SymmetricGroup sym(4);
  auto divisors = interval(sym, delta(4)).elements;
  std::mt19937_64 rng(404);
  for (int trial = 0; trial < 300; ++trial) {
    int k = 1 + static_cast<int>(bounded(rng, 3));
    std::vector<Permutation> tuple;
    for (int j = 0; j < k; ++j) tuple.push_back(divisors[bounded(rng, divisors.size())]);
    auto [lhs, rhs] = armstrong_check(sym, tuple);
    CHECK(lhs == rhs);
  }
}

TEST_CASE("the figure partition validates with criticality nine") {
  auto p = figure_partition();
  long long nontrivial = 0;
  for (const auto& [pos, partition] : p.support) {
    nontrivial += static_cast<long long>(partition.nontrivial_blocks().size());
  }
  CHECK(nontrivial == 5);
  CHECK(validate_ncs(p));
  CHECK(validate_ncs_by_lifting(p));
  CHECK(total_criticality(p) == 9);
  CHECK_FALSE(is_maximal(p));  // rank 9 < 11
}

TEST_CASE("criticality of degenerate partitions") {
  CHECK(total_criticality(make_ncs_partition(5, {})) == 0);
  auto doubleton = make_ncs_partition(2, {{rat("0"), SetPartition(2, {{1, 2}})}});
  CHECK(total_criticality(doubleton) == 1);
  CHECK(is_maximal(doubleton));
}

TEST_CASE("complementary regions of the figure partition") {
  auto report = complementary_regions(figure_partition());
  CHECK(report.count == 10);
  CHECK(report.tree.white_count == 10);
  CHECK(report.tree.black_count == 5);
  CHECK(report.tree.is_tree);
  CHECK(report.tree.edges.size() == 14);  // rk + k
}

TEST_CASE("complementary regions of small partitions") {
  CHECK(complementary_regions(make_ncs_partition(4, {})).count == 1);

  auto maximal3 = make_ncs_partition(3, {{rat("0"), SetPartition(3, {{1, 2, 3}})}});
  CHECK(is_maximal(maximal3));
  CHECK(complementary_regions(maximal3).count == 3);

  auto two_chords = make_ncs_partition(
      3, {{rat("0"), SetPartition(3, {{1, 2}})}, {rat("1/2"), SetPartition(3, {{2, 3}})}});
  CHECK(validate_ncs(two_chords));
  CHECK(total_criticality(two_chords) == 2);
  CHECK(is_maximal(two_chords));
  CHECK(complementary_regions(two_chords).count == 3);

  auto chord2 = make_ncs_partition(2, {{rat("0"), SetPartition(2, {{1, 2}})}});
  CHECK(complementary_regions(chord2).count == 2);
}

TEST_CASE("refinement order on partitions of the circle") {
  auto p = figure_partition();
  CHECK(refinement_leq(make_ncs_partition(12, {}), p));
  CHECK(refinement_leq(p, p));

  auto restriction = make_ncs_partition(
      12, {{rat("2/5"), SetPartition(12, {{1, 2, 3, 11}})},
           {rat("1/2"), SetPartition(12, {{3, 6, 8}})}});
  CHECK(refinement_leq(restriction, p));
  CHECK_FALSE(refinement_leq(p, restriction));
}

TEST_CASE("psi maps circular classes to partitions positionwise") {
  SymmetricGroup sym(3);
  auto u = circ_quotient(
      sym, make_top_point(sym, delta(3),
                          {{rat("1/3"), parse_cycles(3, "(1 2)")},
                           {rat("2/3"), parse_cycles(3, "(2 3)")}}));
  auto p = psi_big(sym, u);
  CHECK(p == make_ncs_partition(3, {{rat("1/3"), SetPartition(3, {{1, 2}})},
                                    {rat("2/3"), SetPartition(3, {{2, 3}})}}));
  CHECK(psi_big_inv(sym, p) == u);

  auto trivial = circ_quotient(sym, make_top_point(sym, delta(3), {}));
  CHECK(psi_big(sym, trivial) == make_ncs_partition(3, {}));
}

TEST_CASE("the figure partition corresponds to its weighted circular factorization") {
  SymmetricGroup sym(12);
  auto cls = psi_big_inv(sym, figure_partition());
  const auto& wf = cls.canonical.wf;
  REQUIRE(wf.positions.size() == 6);  // 0, four interior points, 1
  CHECK(wf.labels[0] == Permutation::identity(12));
  CHECK(wf.labels[1] == parse_cycles(12, "(4 5)"));
  CHECK(wf.labels[2] == parse_cycles(12, "(1 2 3 11)"));
  CHECK(wf.labels[3] == parse_cycles(12, "(3 6 8)(11 12)"));
  CHECK(wf.labels[4] == parse_cycles(12, "(8 9 10)"));
  CHECK(rank_of(sym, cls) == 9);
  CHECK(psi_big(sym, cls) == figure_partition());
}

TEST_CASE("psi_big_inv rejects crossing partitions") {
  SymmetricGroup sym(4);
  auto crossing = make_ncs_partition(4, {{rat("0"), SetPartition(4, {{1, 3}, {2, 4}})}});
  CHECK_FALSE(validate_ncs(crossing));
  CHECK_FALSE(validate_ncs_by_lifting(crossing));
  CHECK_THROWS_AS(psi_big_inv(sym, crossing), DomainError);
}

TEST_CASE("generated partitions respect the rank bound and the region identity") {
  std::mt19937_64 rng(505);
  for (int trial = 0; trial < 1000; ++trial) {
    int d = 2 + static_cast<int>(bounded(rng, 7));  // 2..8
    SymmetricGroup sym(d);
    auto p = random_ncs_partition(sym, rng);
    CHECK(validate_ncs(p));
    CHECK(validate_ncs_by_lifting(p));
    long crit = total_criticality(p);
    CHECK(crit <= d - 1);
    auto report = complementary_regions(p);
    CHECK(report.count == crit + 1);
    CHECK(report.tree.is_tree);
    CHECK(is_maximal(p) == (crit == d - 1));
  }
}

TEST_CASE("shuffle validity agrees with the lifted chord oracle on arbitrary supports") {
  std::mt19937_64 rng(707);
  int invalid_seen = 0;
  for (int trial = 0; trial < 500; ++trial) {
    int d = 2 + static_cast<int>(bounded(rng, 4));  // 2..5
    auto pool = all_set_partitions(d);
    std::vector<std::pair<Rational, SetPartition>> support;
    int positions = 1 + static_cast<int>(bounded(rng, 3));
    std::set<long> ticks;
    while (static_cast<int>(ticks.size()) < positions) ticks.insert(static_cast<long>(bounded(rng, 16)));
    for (long t : ticks) {
      support.emplace_back(Rational(t, 16), pool[bounded(rng, pool.size())]);
    }
    auto p = make_ncs_partition(d, std::move(support));
    bool valid = validate_ncs(p);
    CHECK(valid == validate_ncs_by_lifting(p));
    if (!valid) ++invalid_seen;
  }
  CHECK(invalid_seen > 0);
}

TEST_CASE("psi and its inverse are order-preserving on seeded pairs") {
  std::mt19937_64 rng(909);

  // comparable pairs: a random class and the class of a pointwise sub-point
  for (int trial = 0; trial < 400; ++trial) {
    int d = 3 + static_cast<int>(bounded(rng, 6));  // 3..8
    SymmetricGroup sym(d);
    auto u = random_top_point(sym, delta(d), rng);
    auto v = random_sub_point(sym, u, rng);
    auto cu = circ_quotient(sym, u);
    auto cv = circ_quotient(sym, v);
    CHECK(refinement_leq(psi_big(sym, cv), psi_big(sym, cu)));
    CHECK(psi_big_inv(sym, psi_big(sym, cu)) == cu);
    CHECK(psi_big_inv(sym, psi_big(sym, cv)) == cv);
  }

  // independent pairs: refinement must match the existential class order
  std::map<int, IntervalPoset<SymmetricGroup>> divisors;
  for (int trial = 0; trial < 300; ++trial) {
    int d = 3 + static_cast<int>(bounded(rng, 3));  // 3..5
    SymmetricGroup sym(d);
    if (!divisors.count(d)) divisors.emplace(d, interval(sym, delta(d)));
    auto a = circ_quotient(sym, random_top_point(sym, delta(d), rng));
    auto b = circ_quotient(sym, random_top_point(sym, delta(d), rng));
    CHECK(refinement_leq(psi_big(sym, a), psi_big(sym, b)) ==
          class_leq(sym, a, b, divisors.at(d)));
  }
}
