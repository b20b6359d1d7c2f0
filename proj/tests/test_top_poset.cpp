#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ncfact/top_poset.hpp"
#include "test_util.hpp"

using namespace ncfact;
using namespace ncfact::test;

namespace {

const SymmetricGroup kSym3(3);
const IntegerGroup kInts;

Rational rat(const char* text) { return parse_rational(text); }

TopPoint<Permutation> tpoint(const SymmetricGroup& sym, const Permutation& ambient,
                             std::initializer_list<std::pair<const char*, const char*>> support) {
  std::vector<std::pair<Rational, Permutation>> pairs;
  for (const auto& [pos, label] : support) {
    pairs.emplace_back(rat(pos), parse_cycles(ambient.degree(), label));
  }
  return make_top_point(sym, ambient, std::move(pairs));
}

TopPoint<long long> ipoint(long long ambient,
                           std::initializer_list<std::pair<const char*, long long>> support) {
  std::vector<std::pair<Rational, long long>> pairs;
  for (const auto& [pos, label] : support) pairs.emplace_back(rat(pos), label);
  return make_top_point(kInts, ambient, std::move(pairs));
}

}  // namespace

TEST_CASE("top points validate their product against the ambient") {
  auto u = tpoint(kSym3, delta(3), {{"1/3", "(1 2)"}});
  CHECK(u.wf.target == parse_cycles(3, "(1 2)"));
  CHECK(rank_of(kSym3, u) == 1);

  // (2 3)(1 2) = (1 3 2): lengths add but the product is not below delta
  CHECK_THROWS_AS(tpoint(kSym3, delta(3), {{"1/3", "(2 3)"}, {"2/3", "(1 2)"}}), OrderError);
  // (1 2)(1 2) = 1: product is below delta but the lengths do not add
  CHECK_THROWS_AS(tpoint(kSym3, delta(3), {{"1/3", "(1 2)"}, {"2/3", "(1 2)"}}), DomainError);
}

TEST_CASE("subfactorization order is pointwise") {
  auto u = tpoint(kSym3, delta(3), {{"1/3", "(1 2 3)"}});
  auto v = tpoint(kSym3, delta(3), {{"1/3", "(1 2)"}});
  CHECK(subfact_leq(kSym3, v, u));
  CHECK_FALSE(subfact_leq(kSym3, u, v));
  CHECK(subfact_leq(kSym3, u, u));

  // support mismatch forces a comparison against the identity
  auto w = tpoint(kSym3, delta(3), {{"1/2", "(1 2 3)"}});
  auto b = tpoint(kSym3, delta(3), {{"1/3", "(2 3)"}});
  CHECK_FALSE(subfact_leq(kSym3, b, w));
  CHECK(subfact_leq(kSym3, tpoint(kSym3, delta(3), {}), w));
}

TEST_CASE("multiset product and inverse are pointwise") {
  auto u = tpoint(kSym3, delta(3), {{"1/3", "(1 2)"}, {"2/3", "(2 3)"}});
  auto v = tpoint(kSym3, delta(3), {{"1/3", "(1 2)"}});

  CHECK(multiset_product(kSym3, multiset_inverse(kSym3, to_multiset(kSym3, v)),
                         to_multiset(kSym3, v))
            .empty());

  auto quotient = multiset_product(kSym3, multiset_inverse(kSym3, to_multiset(kSym3, v)),
                                   to_multiset(kSym3, u));
  auto back = multiset_product(kSym3, to_multiset(kSym3, v), quotient);
  CHECK(back == to_multiset(kSym3, u));
}

TEST_CASE("division preserves the subfactorization order (seeded triples)") {
  SymmetricGroup sym(4);
  std::mt19937_64 rng(20240401);
  int checked = 0;
  for (int trial = 0; trial < 200; ++trial) {
    auto u = random_top_point(sym, delta(4), rng);
    auto v = random_sub_point(sym, u, rng);
    auto z = random_top_point(sym, complement(sym, v.wf.target, delta(4)), rng);
    auto w = upper_set_phi_inv(sym, v, z);
    REQUIRE(subfact_leq(sym, v, u));
    REQUIRE(subfact_leq(sym, v, w));

    auto raw_u = multiset_product(sym, multiset_inverse(sym, to_multiset(sym, v)),
                                  to_multiset(sym, u));
    auto raw_w = multiset_product(sym, multiset_inverse(sym, to_multiset(sym, v)),
                                  to_multiset(sym, w));
    auto vu = make_top_point(sym, delta(4), raw_u);
    auto vw = make_top_point(sym, delta(4), raw_w);
    CHECK(subfact_leq(sym, u, w) == subfact_leq(sym, vu, vw));
    if (subfact_leq(sym, u, w)) ++checked;
  }
  CHECK(checked > 0);  // the equivalence is exercised on both outcomes
}

TEST_CASE("lower sets are products of intervals") {
  auto s = ipoint(5, {{"0", 0}, {"1/3", 2}, {"1/2", 3}, {"1", 0}});
  auto grid = lower_set(kInts, s);
  CHECK(grid.points.size() == 12);

  auto boolean = ipoint(4, {{"0", 1}, {"1/3", 1}, {"1/2", 1}, {"1", 1}});
  auto cube = lower_set(kInts, boolean);
  CHECK(cube.points.size() == 16);
  std::vector<int> by_rank(5, 0);
  for (const auto& p : cube.points) ++by_rank[static_cast<std::size_t>(rank_of(kInts, p))];
  CHECK(by_rank == std::vector<int>{1, 4, 6, 4, 1});

  auto top = tpoint(kSym3, delta(3), {{"1/2", "(1 2 3)"}});
  auto lower = lower_set(kSym3, top);
  CHECK(lower.points.size() == 5);
}

TEST_CASE("lower set agrees with brute-force pointwise enumeration") {
  auto u = tpoint(kSym3, delta(3), {{"0", "(1 2)"}, {"1/2", "(2 3)"}});
  auto lower = lower_set(kSym3, u);

  std::set<TopPoint<Permutation>> brute;
  for (const auto& p : enumerate_points_on_support(kSym3, delta(3), {rat("1/2")})) {
    if (subfact_leq(kSym3, p, u)) brute.insert(p);
  }
  CHECK(brute.size() == lower.points.size());
  for (const auto& p : lower.points) CHECK(brute.count(p) == 1);

  // product order matches the subfactorization order
  for (std::size_t i = 0; i < lower.points.size(); ++i) {
    for (std::size_t j = 0; j < lower.points.size(); ++j) {
      bool productwise = true;
      for (std::size_t c = 0; c < lower.coordinates[i].size(); ++c) {
        const auto& factor = lower.factors[c];
        if (!factor.leq[static_cast<std::size_t>(lower.coordinates[i][c])]
                       [static_cast<std::size_t>(lower.coordinates[j][c])]) {
          productwise = false;
        }
      }
      CHECK(productwise == subfact_leq(kSym3, lower.points[i], lower.points[j]));
    }
  }
}

TEST_CASE("upper set isomorphism on the worked Sym_3 instance") {
  auto v = tpoint(kSym3, delta(3), {{"1/3", "(1 2)"}});
  auto u = tpoint(kSym3, delta(3), {{"1/3", "(1 2)"}, {"2/3", "(2 3)"}});
  auto image = upper_set_phi(kSym3, v, u);
  CHECK(image == tpoint(kSym3, parse_cycles(3, "(2 3)"), {{"2/3", "(2 3)"}}));
  CHECK(image.wf.target == complement(kSym3, parse_cycles(3, "(1 2)"), delta(3)));
  CHECK(upper_set_phi_inv(kSym3, v, image) == u);
}

TEST_CASE("phi with a trivial base is the identity map") {
  auto v = tpoint(kSym3, delta(3), {});
  auto u = tpoint(kSym3, delta(3), {{"1/3", "(1 2)"}, {"2/3", "(2 3)"}});
  CHECK(upper_set_phi(kSym3, v, u) == u);
}

TEST_CASE("upper set of a rank-one multiset is a copy of the smaller poset") {
  auto v = ipoint(3, {{"1/2", 1}});
  // points above v on a support extended by a fresh position
  Rational fresh = fresh_between(rat("1/2"), rat("1"));
  auto above = enumerate_points_on_support(kInts, 3LL, {rat("1/2"), fresh});
  std::set<TopPoint<long long>> images;
  int count = 0;
  for (const auto& u : above) {
    if (!subfact_leq(kInts, v, u)) continue;
    ++count;
    auto w = upper_set_phi(kInts, v, u);
    CHECK(leq_abs(kInts, w.wf.target, 2LL));
    CHECK(rank_of(kInts, w) == rank_of(kInts, u) - 1);
    CHECK(upper_set_phi_inv(kInts, v, w) == u);
    images.insert(w);
  }
  CHECK(count == static_cast<int>(images.size()));
  // the image is exactly the slice of C(Z,2,I) on the same support
  auto target_points = enumerate_points_on_support(kInts, 2LL, {rat("1/2"), fresh});
  CHECK(images == std::set<TopPoint<long long>>(target_points.begin(), target_points.end()));
}

TEST_CASE("phi and its inverse are order isomorphisms on a fixed support (Sym_3, exhaustive)") {
  std::vector<Rational> interior = {rat("1/3"), rat("2/3")};
  auto points = enumerate_points_on_support(kSym3, delta(3), interior);
  for (const auto& v : points) {
    std::vector<TopPoint<Permutation>> ups;
    for (const auto& u : points) {
      if (subfact_leq(kSym3, v, u)) ups.push_back(u);
    }
    std::vector<TopPoint<Permutation>> images;
    for (const auto& u : ups) {
      auto w = upper_set_phi(kSym3, v, u);
      CHECK(upper_set_phi_inv(kSym3, v, w) == u);
      CHECK(rank_of(kSym3, w) == rank_of(kSym3, u) - rank_of(kSym3, v));
      images.push_back(w);
    }
    for (std::size_t i = 0; i < ups.size(); ++i) {
      for (std::size_t j = 0; j < ups.size(); ++j) {
        CHECK(subfact_leq(kSym3, ups[i], ups[j]) == subfact_leq(kSym3, images[i], images[j]));
      }
    }
  }
}

TEST_CASE("phi preserves within-simplex distances on sampled pairs") {
  std::vector<Rational> interior = {rat("1/3"), rat("2/3")};
  auto points = enumerate_points_on_support(kSym3, delta(3), interior);
  for (const auto& v : points) {
    for (const auto& u1 : points) {
      if (!subfact_leq(kSym3, v, u1)) continue;
      for (const auto& u2 : points) {
        if (!subfact_leq(kSym3, v, u2)) continue;
        if (!(u1.wf.target == u2.wf.target)) continue;
        double before;
        try {
          before = simplex_distance(kSym3, u1.wf, u2.wf);
        } catch (const MetricScopeError&) {
          continue;
        }
        auto w1 = upper_set_phi(kSym3, v, u1);
        auto w2 = upper_set_phi(kSym3, v, u2);
        CHECK(simplex_distance(kSym3, w1.wf, w2.wf) == doctest::Approx(before).epsilon(1e-12));
      }
    }
  }
}

TEST_CASE("circular equivalence folds endpoints through the ambient") {
  auto u = tpoint(kSym3, delta(3), {{"1", "(1 2)"}});   // [1 a]
  auto v = tpoint(kSym3, delta(3), {{"0", "(2 3)"}});   // [gag^{-1} 1]
  CHECK(circ_equiv(kSym3, u, v));
  CHECK(circ_equiv(kSym3, u, u));
  CHECK(rho(kSym3, u.wf) != rho(kSym3, v.wf));  // distinct order complexes, same class

  auto x = tpoint(kSym3, delta(3), {{"0", "(1 2)"}, {"1/2", "(2 3)"}});
  auto y = tpoint(kSym3, delta(3), {{"1/2", "(2 3)"}});
  CHECK_FALSE(circ_equiv(kSym3, x, y));  // equal interiors, folds a vs 1
}

TEST_CASE("circular quotient has a well-defined rank") {
  SymmetricGroup sym4(4);
  auto divisors = interval(sym4, delta(4));
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    auto u = random_top_point(sym4, delta(4), rng);
    auto c = circ_quotient(sym4, u);
    CHECK(circ_equiv(sym4, c.canonical, u));
    for (const auto& rep : class_points(sym4, c, divisors)) {
      CHECK(circ_quotient(sym4, rep) == c);
      CHECK(rank_of(sym4, circ_quotient(sym4, rep)) == rank_of(sym4, c));
    }
  }
}

TEST_CASE("rank-1 stratum of Sym_3 is a single circle of length three") {
  auto stratum = stratum_complex(kSym3, delta(3), 1);
  CHECK(stratum.summary.dims == std::vector<long long>{3, 3});
  CHECK(stratum.components == 1);
  CHECK(stratum.cover_degrees ==
        std::vector<std::pair<std::string, long>>{{"(2 3)", 3}, {"(1 2)", 3}, {"(1 3)", 3}});
  // every vertex bounds exactly two edge-ends
  std::map<long long, int> degree;
  for (const auto& [cell, facet, pos] : stratum.summary.faces) ++degree[facet];
  for (const auto& [vertex, deg] : degree) CHECK(deg == 2);
}

TEST_CASE("maximal stratum coincides with the interval complex") {
  for (int d = 2; d <= 4; ++d) {
    SymmetricGroup sym(d);
    auto stratum = stratum_complex(sym, delta(d), sym.length(delta(d)));
    auto complex = build_interval_complex(sym, delta(d));
    CHECK(stratum.summary.dims == complex.summary.dims);
    CHECK(stratum.summary.labels == complex.summary.labels);
    CHECK(stratum.summary.faces == complex.summary.faces);
  }
}

TEST_CASE("integer strata are disjoint copies of the interval complexes") {
  for (long long r = 1; r <= 3; ++r) {
    auto stratum = stratum_complex(kInts, 3LL, r);
    auto complex = build_interval_complex(kInts, r);
    CHECK(stratum.summary.dims == complex.summary.dims);
    CHECK(stratum.components == 1);
    for (const auto& [h, k] : stratum.cover_degrees) CHECK(k == 1);
  }
  auto bottom = stratum_complex(kInts, 3LL, 0);
  CHECK(bottom.summary.dims == std::vector<long long>{1});
}

TEST_CASE("stratum cell conservation across the conjugation orbits") {
  SymmetricGroup sym(4);
  for (long r = 0; r <= 3; ++r) {
    auto stratum = stratum_complex(sym, delta(4), r);
    auto base = interval(sym, delta(4));
    std::set<Permutation> level;
    for (int i = 0; i < base.size(); ++i) {
      if (base.ranks[static_cast<std::size_t>(i)] == r) {
        level.insert(base.elements[static_cast<std::size_t>(i)]);
      }
    }
    // group the level into <g>-conjugation orbits
    std::vector<long long> expected;
    std::set<Permutation> seen;
    for (const auto& h : level) {
      if (seen.count(h)) continue;
      std::vector<Permutation> orbit;
      auto x = h;
      do {
        orbit.push_back(x);
        seen.insert(x);
        x = conjugate(sym, delta(4), x);
      } while (x != h);
      auto cells = enumerate_linear(sym, h).rank_counts;
      for (std::size_t j = 0; j < cells.size(); ++j) {
        if (expected.size() <= j) expected.push_back(0);
        expected[j] += static_cast<long long>(orbit.size()) * cells[j];
      }
    }
    CHECK(stratum.pre_quotient_dims == expected);
  }
}

TEST_CASE("circular upper sets map onto the complement poset") {
  auto trivial = circ_quotient(kSym3, tpoint(kSym3, delta(3), {}));
  CHECK(circ_upper_set(kSym3, trivial).h_prime == delta(3));

  auto maximal = circ_quotient(kSym3, tpoint(kSym3, delta(3), {{"1/2", "(1 2 3)"}}));
  CHECK(circ_upper_set(kSym3, maximal).h_prime == kSym3.identity());

  auto c = circ_quotient(kSym3, tpoint(kSym3, delta(3), {{"1/2", "(1 2)"}}));
  auto up = circ_upper_set(kSym3, c);
  CHECK(up.h_prime == parse_cycles(3, "(2 3)"));

  // image classes on the fixed support are exactly the classes of the
  // complement poset on that support
  auto divisors3 = interval(kSym3, delta(3));
  SymmetricGroup symb(3);
  std::set<CircClass<Permutation>> images;
  std::vector<CircClass<Permutation>> sources;
  for (const auto& u : enumerate_points_on_support(kSym3, delta(3), {rat("1/2")})) {
    if (!subfact_leq(kSym3, up.base, u)) continue;
    // well-defined on classes: equivalent points above the base map together
    auto image = circ_upper_map(kSym3, up, u);
    for (const auto& rep : class_points(kSym3, circ_quotient(kSym3, u), divisors3)) {
      if (subfact_leq(kSym3, up.base, rep)) {
        CHECK(circ_upper_map(kSym3, up, rep) == image);
      }
    }
    images.insert(image);
    sources.push_back(circ_quotient(kSym3, u));
  }
  auto expected = enumerate_classes_on_support(symb, parse_cycles(3, "(2 3)"), {rat("1/2")});
  CHECK(images == std::set<CircClass<Permutation>>(expected.begin(), expected.end()));

  // rank profile match
  std::map<long, int> image_profile, expected_profile;
  for (const auto& w : images) ++image_profile[rank_of(symb, w)];
  for (const auto& w : expected) ++expected_profile[rank_of(symb, w)];
  CHECK(image_profile == expected_profile);
}

TEST_CASE("class order is existential over representatives and preserved by the upper map") {
  auto divisors = interval(kSym3, delta(3));
  auto points = enumerate_points_on_support(kSym3, delta(3), {rat("1/2")});
  std::set<CircClass<Permutation>> classes_set;
  for (const auto& u : points) classes_set.insert(circ_quotient(kSym3, u));
  std::vector<CircClass<Permutation>> classes(classes_set.begin(), classes_set.end());

  // class_leq against the definition: lift over all representative pairs
  for (const auto& a : classes) {
    for (const auto& b : classes) {
      bool expected = false;
      for (const auto& ra : class_points(kSym3, a, divisors)) {
        for (const auto& rb : class_points(kSym3, b, divisors)) {
          if (subfact_leq(kSym3, ra, rb)) expected = true;
        }
      }
      CHECK(class_leq(kSym3, a, b, divisors) == expected);
    }
  }
}

TEST_CASE("random top points are valid and deterministic under a fixed seed") {
  SymmetricGroup sym(4);
  std::mt19937_64 rng1(99), rng2(99);
  for (int i = 0; i < 50; ++i) {
    auto a = random_top_point(sym, delta(4), rng1);
    auto b = random_top_point(sym, delta(4), rng2);
    CHECK(a == b);
    CHECK(leq_abs(sym, a.wf.target, delta(4)));
  }
}
