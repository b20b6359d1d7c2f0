#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "ncfact/complexes.hpp"
#include "ncfact/errors.hpp"
#include "ncfact/factorization.hpp"
#include "ncfact/interval.hpp"
#include "ncfact/weighted.hpp"

namespace ncfact {

/// A point of the graded topological poset over (G, g): a weighted linear
/// factorization of some h <= g, carrying its ambient target.
template <typename E>
struct TopPoint {
  E ambient;
  WeightedLinearFactorization<E> wf;  // wf.target = rho(point), a divisor of ambient

  bool operator==(const TopPoint&) const = default;
  bool operator<(const TopPoint& rhs) const {
    if (ambient != rhs.ambient) return ambient < rhs.ambient;
    if (wf.positions != rhs.wf.positions) return wf.positions < rhs.wf.positions;
    return wf.labels < rhs.wf.labels;
  }
};

template <MarkedGroup G>
TopPoint<typename G::Element> make_top_point(
    const G& group, const typename G::Element& ambient,
    std::vector<std::pair<Rational, typename G::Element>> support) {
  using E = typename G::Element;
  E product = rho(group, support);
  if (!leq_abs(group, product, ambient)) {
    throw OrderError("point multiplies to an element outside [1, ambient]");
  }
  TopPoint<E> out;
  out.ambient = ambient;
  out.wf = make_weighted(group, product, std::move(support));
  return out;
}

template <MarkedGroup G>
long rank_of(const G& group, const TopPoint<typename G::Element>& u) {
  return group.length(u.wf.target);
}

/// Pointwise absolute-order comparison over the union of supports.
template <MarkedGroup G>
bool subfact_leq(const G& group, const TopPoint<typename G::Element>& v,
                 const TopPoint<typename G::Element>& u) {
  if (!(v.ambient == u.ambient)) throw DomainError("subfactorization needs a common ambient");
  std::size_t i = 0, j = 0;
  const auto& vp = v.wf.positions;
  const auto& up = u.wf.positions;
  while (i < vp.size() || j < up.size()) {
    if (j == up.size() || (i < vp.size() && vp[i] < up[j])) {
      if (!group.is_identity(v.wf.labels[i])) return false;
      ++i;
    } else if (i == vp.size() || up[j] < vp[i]) {
      ++j;  // v is trivial there
    } else {
      if (!leq_abs(group, v.wf.labels[i], u.wf.labels[j])) return false;
      ++i;
      ++j;
    }
  }
  return true;
}

/// Finitely supported multisets with no validity requirements; the raw
/// carrier for pointwise products and inverses.
template <typename E>
using RawMultiset = std::vector<std::pair<Rational, E>>;

template <MarkedGroup G>
RawMultiset<typename G::Element> to_multiset(const G& group,
                                             const TopPoint<typename G::Element>& u) {
  RawMultiset<typename G::Element> out;
  for (std::size_t i = 0; i < u.wf.positions.size(); ++i) {
    if (!group.is_identity(u.wf.labels[i])) out.emplace_back(u.wf.positions[i], u.wf.labels[i]);
  }
  return out;
}

template <MarkedGroup G>
RawMultiset<typename G::Element> multiset_product(const G& group,
                                                  const RawMultiset<typename G::Element>& a,
                                                  const RawMultiset<typename G::Element>& b) {
  std::map<Rational, typename G::Element> acc;
  for (const auto& [pos, label] : a) acc.emplace(pos, group.identity()).first->second = label;
  for (const auto& [pos, label] : b) {
    auto [it, inserted] = acc.emplace(pos, label);
    if (!inserted) it->second = group.multiply(it->second, label);
  }
  RawMultiset<typename G::Element> out;
  for (auto& [pos, label] : acc) {
    if (!group.is_identity(label)) out.emplace_back(pos, label);
  }
  return out;
}

template <MarkedGroup G>
RawMultiset<typename G::Element> multiset_inverse(const G& group,
                                                  const RawMultiset<typename G::Element>& a) {
  RawMultiset<typename G::Element> out;
  out.reserve(a.size());
  for (const auto& [pos, label] : a) out.emplace_back(pos, group.inverse(label));
  return out;
}

/// The lower set of u: labels shrink independently at every support position,
/// so the result is the product of the intervals below the labels.
template <MarkedGroup G>
struct LowerSet {
  using E = typename G::Element;
  TopPoint<E> top;
  std::vector<IntervalPoset<G>> factors;      // one interval per support position
  std::vector<TopPoint<E>> points;            // all points, product order
  std::vector<std::vector<int>> coordinates;  // index into each factor
};

template <MarkedGroup G>
LowerSet<G> lower_set(const G& group, const TopPoint<typename G::Element>& u,
                      const SizeGuard& guard = {}) {
  LowerSet<G> out;
  out.top = u;
  std::uint64_t total = 1;
  for (const auto& label : u.wf.labels) {
    out.factors.push_back(interval(group, label, guard));
    total *= static_cast<std::uint64_t>(out.factors.back().size());
    guard.check(total, "lower_set");
  }
  std::vector<int> coord(u.wf.labels.size(), 0);
  while (true) {
    std::vector<std::pair<Rational, typename G::Element>> support;
    for (std::size_t i = 0; i < coord.size(); ++i) {
      support.emplace_back(u.wf.positions[i],
                           out.factors[i].elements[static_cast<std::size_t>(coord[i])]);
    }
    out.points.push_back(make_top_point(group, u.ambient, std::move(support)));
    out.coordinates.push_back(coord);
    std::size_t i = 0;
    for (; i < coord.size(); ++i) {
      if (coord[i] + 1 < out.factors[i].size()) {
        ++coord[i];
        break;
      }
      coord[i] = 0;
    }
    if (i == coord.size()) break;
  }
  return out;
}

/// The conjugating product prod_{s > r} v(s).
template <MarkedGroup G>
typename G::Element tail_product(const G& group, const TopPoint<typename G::Element>& v,
                                 const Rational& r) {
  auto acc = group.identity();
  for (std::size_t i = 0; i < v.wf.positions.size(); ++i) {
    if (v.wf.positions[i] > r) acc = group.multiply(acc, v.wf.labels[i]);
  }
  return acc;
}

/// The upper-set isomorphism: for v <= u, phi(u)(r) = c_r^{-1} (v^{-1}u)(r) c_r
/// with c_r the tail product of v past r. Lands in the poset over the
/// complement h' = rho(v)^{-1} * ambient.
template <MarkedGroup G>
TopPoint<typename G::Element> upper_set_phi(const G& group,
                                            const TopPoint<typename G::Element>& v,
                                            const TopPoint<typename G::Element>& u) {
  using E = typename G::Element;
  if (!subfact_leq(group, v, u)) throw OrderError("upper_set_phi requires v <= u");
  E h_prime = complement(group, v.wf.target, v.ambient);
  std::vector<std::pair<Rational, E>> support;
  for (std::size_t j = 0; j < u.wf.positions.size(); ++j) {
    const Rational& r = u.wf.positions[j];
    E vr = group.identity();
    for (std::size_t i = 0; i < v.wf.positions.size(); ++i) {
      if (v.wf.positions[i] == r) vr = v.wf.labels[i];
    }
    E c = tail_product(group, v, r);
    E label = group.multiply(
        group.multiply(group.inverse(c), group.multiply(group.inverse(vr), u.wf.labels[j])), c);
    support.emplace_back(r, label);
  }
  return make_top_point(group, h_prime, std::move(support));
}

/// Inverse of the upper-set isomorphism: u(r) = v(r) c_r w(r) c_r^{-1}.
template <MarkedGroup G>
TopPoint<typename G::Element> upper_set_phi_inv(const G& group,
                                                const TopPoint<typename G::Element>& v,
                                                const TopPoint<typename G::Element>& w) {
  using E = typename G::Element;
  std::set<Rational> positions(v.wf.positions.begin(), v.wf.positions.end());
  positions.insert(w.wf.positions.begin(), w.wf.positions.end());
  auto label_at = [&group](const TopPoint<E>& p, const Rational& r) {
    for (std::size_t i = 0; i < p.wf.positions.size(); ++i) {
      if (p.wf.positions[i] == r) return p.wf.labels[i];
    }
    return group.identity();
  };
  std::vector<std::pair<Rational, E>> support;
  for (const Rational& r : positions) {
    E c = tail_product(group, v, r);
    E label = group.multiply(
        label_at(v, r), group.multiply(c, group.multiply(label_at(w, r), group.inverse(c))));
    support.emplace_back(r, label);
  }
  return make_top_point(group, v.ambient, std::move(support));
}

/// Circular equivalence over the ambient: equal interiors and equal folded
/// endpoint product g x_R g^{-1} x_L.
template <MarkedGroup G>
typename G::Element fold_label(const G& group, const TopPoint<typename G::Element>& u) {
  return group.multiply(
      group.multiply(group.multiply(u.ambient, u.wf.labels.back()), group.inverse(u.ambient)),
      u.wf.labels.front());
}

template <MarkedGroup G>
bool circ_equiv(const G& group, const TopPoint<typename G::Element>& u,
                const TopPoint<typename G::Element>& v) {
  if (!(u.ambient == v.ambient)) throw DomainError("circular equivalence needs a common ambient");
  if (std::vector<Rational>(u.wf.positions.begin() + 1, u.wf.positions.end() - 1) !=
      std::vector<Rational>(v.wf.positions.begin() + 1, v.wf.positions.end() - 1)) {
    return false;
  }
  for (std::size_t i = 1; i + 1 < u.wf.positions.size(); ++i) {
    if (!(u.wf.labels[i] == v.wf.labels[i])) return false;
  }
  return fold_label(group, u) == fold_label(group, v);
}

/// Equivalence class in the circular topological poset, held by its canonical
/// representative 0^{z_L} s_1^{z_1} ... s_k^{z_k} 1^1.
template <typename E>
struct CircClass {
  TopPoint<E> canonical;

  bool operator==(const CircClass&) const = default;
  bool operator<(const CircClass& rhs) const { return canonical < rhs.canonical; }
};

template <MarkedGroup G>
CircClass<typename G::Element> circ_quotient(const G& group,
                                             const TopPoint<typename G::Element>& u) {
  using E = typename G::Element;
  std::vector<std::pair<Rational, E>> support;
  support.emplace_back(Rational(0), fold_label(group, u));
  for (std::size_t i = 1; i + 1 < u.wf.positions.size(); ++i) {
    support.emplace_back(u.wf.positions[i], u.wf.labels[i]);
  }
  support.emplace_back(Rational(1), group.identity());
  return CircClass<E>{make_top_point(group, u.ambient, std::move(support))};
}

template <MarkedGroup G>
long rank_of(const G& group, const CircClass<typename G::Element>& c) {
  return group.length(c.canonical.wf.target);
}

/// All points equivalent to the class representative: the interior is fixed
/// and the endpoint split ranges over the compatible (x_L, x_R) pairs.
/// `divisors` is the interval [1, ambient].
template <MarkedGroup G>
std::vector<TopPoint<typename G::Element>> class_points(
    const G& group, const CircClass<typename G::Element>& c, const IntervalPoset<G>& divisors) {
  using E = typename G::Element;
  std::vector<TopPoint<E>> out;
  const E z_left = c.canonical.wf.labels.front();
  const E g = c.canonical.ambient;
  for (const auto& x_right : divisors.elements) {
    if (group.length(x_right) > group.length(z_left)) continue;
    E x_left = group.multiply(
        group.multiply(group.multiply(g, group.inverse(x_right)), group.inverse(g)), z_left);
    if (!group.in_monoid(x_left)) continue;
    if (group.length(x_left) + group.length(x_right) != group.length(z_left)) continue;
    std::vector<std::pair<Rational, E>> support;
    support.emplace_back(Rational(0), x_left);
    for (std::size_t i = 1; i + 1 < c.canonical.wf.positions.size(); ++i) {
      support.emplace_back(c.canonical.wf.positions[i], c.canonical.wf.labels[i]);
    }
    support.emplace_back(Rational(1), x_right);
    E product = rho(group, support);
    if (!leq_abs(group, product, g)) continue;
    long total = 0;
    for (const auto& [pos, label] : support) total += group.length(label);
    if (total != group.length(product)) continue;
    out.push_back(make_top_point(group, g, std::move(support)));
  }
  return out;
}

template <MarkedGroup G>
std::vector<TopPoint<typename G::Element>> class_points(
    const G& group, const CircClass<typename G::Element>& c) {
  return class_points(group, c, interval(group, c.canonical.ambient));
}

/// Order on circular classes: some representative of a sits below some
/// representative of b.
template <MarkedGroup G>
bool class_leq(const G& group, const CircClass<typename G::Element>& a,
               const CircClass<typename G::Element>& b, const IntervalPoset<G>& divisors) {
  for (const auto& ra : class_points(group, a, divisors)) {
    for (const auto& rb : class_points(group, b, divisors)) {
      if (subfact_leq(group, ra, rb)) return true;
    }
  }
  return false;
}

template <MarkedGroup G>
bool class_leq(const G& group, const CircClass<typename G::Element>& a,
               const CircClass<typename G::Element>& b) {
  return class_leq(group, a, b, interval(group, a.canonical.ambient));
}

/// Smallest k >= 1 with g^k h g^{-k} = h. Terminates for every group: once
/// g^k is the identity the conjugate has returned to h, so the order of g is
/// an implicit cap (checked after the comparison so abelian infinite groups
/// return 1 immediately).
template <MarkedGroup G>
long cover_degree(const G& group, const typename G::Element& g, const typename G::Element& h) {
  auto conj = h;
  auto g_power = group.identity();
  long k = 0;
  while (true) {
    conj = conjugate(group, g, conj);
    g_power = group.multiply(g_power, g);
    ++k;
    if (conj == h || group.is_identity(g_power)) return k;
  }
}

/// The rank-r stratum of the circular topological poset: the disjoint union of
/// the order complexes O_h over length-r divisors h of g, glued by the
/// ambient-g circular identification.
template <MarkedGroup G>
struct StratumComplex {
  ComplexSummary summary;
  std::vector<std::pair<std::string, long>> cover_degrees;  // (h, k(h)), canonical order
  long long components = 0;
  std::vector<long long> pre_quotient_dims;
};

template <MarkedGroup G>
StratumComplex<G> stratum_complex(const G& group, const typename G::Element& g, long rank,
                                  const SizeGuard& guard = {}) {
  using E = typename G::Element;
  auto base = interval(group, g, guard);
  std::vector<E> level;
  for (int i = 0; i < base.size(); ++i) {
    if (base.ranks[static_cast<std::size_t>(i)] == rank) {
      level.push_back(base.elements[static_cast<std::size_t>(i)]);
    }
  }
  if (level.empty()) throw DomainError("no elements of the requested rank in [1,g]");

  StratumComplex<G> out;
  for (const auto& h : level) {
    out.cover_degrees.emplace_back(group.to_string(h), cover_degree(group, g, h));
  }

  auto fold = [&group, &g](const std::vector<E>& entries) {
    CircularFactorization<E> c;
    c.target = g;
    c.z_left = group.multiply(
        group.multiply(group.multiply(g, entries.back()), group.inverse(g)), entries.front());
    c.inner.assign(entries.begin() + 1, entries.end() - 1);
    return c;
  };

  // collect cells as folded classes, remembering one linear representative per
  // class and checking facet agreement across all representatives
  std::map<CircularFactorization<E>, std::vector<std::vector<E>>> classes;
  std::vector<FactorizationPoset<G>> order_posets;
  std::uint64_t pre_total = 0;
  for (const auto& h : level) {
    order_posets.push_back(enumerate_linear(group, h, guard));
    pre_total += static_cast<std::uint64_t>(order_posets.back().size());
    guard.check(pre_total, "stratum_complex");
    for (const auto& f : order_posets.back().elements) {
      classes[fold(f.entries)].push_back(f.entries);
    }
  }
  for (const auto& poset : order_posets) {
    for (std::size_t j = 0; j < poset.rank_counts.size(); ++j) {
      if (out.pre_quotient_dims.size() <= j) out.pre_quotient_dims.push_back(0);
      out.pre_quotient_dims[j] += poset.rank_counts[j];
    }
  }

  std::vector<CircularFactorization<E>> cells;
  for (const auto& [key, reps] : classes) cells.push_back(key);
  std::sort(cells.begin(), cells.end(), [&](const auto& a, const auto& b) {
    if (a.inner_count() != b.inner_count()) return a.inner_count() < b.inner_count();
    return circular_text(group, a) < circular_text(group, b);
  });
  std::map<CircularFactorization<E>, int> cell_index;
  int top_dim = 0;
  for (int i = 0; i < static_cast<int>(cells.size()); ++i) {
    cell_index.emplace(cells[static_cast<std::size_t>(i)], i);
    out.summary.labels.push_back(circular_text(group, cells[static_cast<std::size_t>(i)]));
    out.summary.cell_dims.push_back(cells[static_cast<std::size_t>(i)].inner_count());
    top_dim = std::max(top_dim, cells[static_cast<std::size_t>(i)].inner_count());
  }
  out.summary.dims.assign(static_cast<std::size_t>(top_dim) + 1, 0);
  for (int d : out.summary.cell_dims) ++out.summary.dims[static_cast<std::size_t>(d)];

  auto facet_key = [&](const std::vector<E>& entries, int pos) {
    LinearFactorization<E> f;
    f.target = g;  // carrier only; merge does not validate
    f.entries = entries;
    return fold(merge(group, f, pos).entries);
  };
  for (int i = 0; i < static_cast<int>(cells.size()); ++i) {
    const auto& cell = cells[static_cast<std::size_t>(i)];
    const int k = cell.inner_count();
    if (k < 1) continue;
    const auto& reps = classes.at(cell);
    for (int pos = 0; pos <= k; ++pos) {
      int facet = cell_index.at(facet_key(reps.front(), pos));
      for (const auto& rep : reps) {
        if (cell_index.at(facet_key(rep, pos)) != facet) {
          throw DomainError("stratum face identification is not well-defined");
        }
      }
      out.summary.faces.push_back({i, facet, pos});
    }
  }

  out.summary.euler = detail::alternating_sum(out.summary.dims);
  out.summary.skeleton_components =
      detail::skeleton_components(out.summary.cell_dims, out.summary.faces, top_dim);
  out.components = out.summary.skeleton_components.back();
  return out;
}

/// Upper set of a circular class: isomorphic to the circular topological poset
/// of the complement h'. Points above the base map through phi and the
/// h'-quotient.
template <MarkedGroup G>
struct CircUpperSet {
  typename G::Element h_prime;
  TopPoint<typename G::Element> base;  // canonical representative
};

template <MarkedGroup G>
CircUpperSet<G> circ_upper_set(const G& group, const CircClass<typename G::Element>& c) {
  CircUpperSet<G> out{complement(group, c.canonical.wf.target, c.canonical.ambient), c.canonical};
  return out;
}

template <MarkedGroup G>
CircClass<typename G::Element> circ_upper_map(const G& group, const CircUpperSet<G>& up,
                                              const TopPoint<typename G::Element>& u) {
  auto image = upper_set_phi(group, up.base, u);
  return circ_quotient(group, image);
}

/// All valid points with support inside {0} U interior U {1} over the ambient.
template <MarkedGroup G>
std::vector<TopPoint<typename G::Element>> enumerate_points_on_support(
    const G& group, const typename G::Element& ambient, const std::vector<Rational>& interior,
    const SizeGuard& guard = {}) {
  using E = typename G::Element;
  auto divisors = interval(group, ambient, guard);
  std::vector<Rational> positions;
  positions.push_back(Rational(0));
  for (const auto& r : interior) positions.push_back(r);
  positions.push_back(Rational(1));
  std::sort(positions.begin(), positions.end());

  std::vector<TopPoint<E>> out;
  std::vector<E> labels;
  const long budget = group.length(ambient);
  auto rec = [&](auto&& self, std::size_t i, long used) -> void {
    if (i == positions.size()) {
      std::vector<std::pair<Rational, E>> support;
      for (std::size_t j = 0; j < positions.size(); ++j) support.emplace_back(positions[j], labels[j]);
      E product = rho(group, support);
      if (!leq_abs(group, product, ambient)) return;
      if (used != group.length(product)) return;
      guard.check(out.size() + 1, "enumerate_points_on_support");
      out.push_back(make_top_point(group, ambient, std::move(support)));
      return;
    }
    for (const auto& x : divisors.elements) {
      long l = group.length(x);
      if (used + l > budget) continue;
      labels.push_back(x);
      self(self, i + 1, used + l);
      labels.pop_back();
    }
  };
  rec(rec, 0, 0);
  std::sort(out.begin(), out.end());
  return out;
}

/// All circular classes with interior support inside the given set.
template <MarkedGroup G>
std::vector<CircClass<typename G::Element>> enumerate_classes_on_support(
    const G& group, const typename G::Element& ambient, const std::vector<Rational>& interior,
    const SizeGuard& guard = {}) {
  std::set<CircClass<typename G::Element>> seen;
  for (const auto& u : enumerate_points_on_support(group, ambient, interior, guard)) {
    seen.insert(circ_quotient(group, u));
  }
  return std::vector<CircClass<typename G::Element>>(seen.begin(), seen.end());
}

namespace detail {

/// Uniform draw in [0, n) without platform-dependent distribution internals.
template <typename Rng>
std::uint64_t bounded_uint(Rng& rng, std::uint64_t n) {
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n);
  std::uint64_t v;
  do {
    v = rng();
  } while (v >= limit);
  return v % n;
}

}  // namespace detail

/// A uniform-ish reduced generator word multiplying left-to-right to target.
template <MarkedGroup G, typename Rng>
std::vector<typename G::Element> random_reduced_word(const G& group,
                                                     const typename G::Element& target, Rng& rng) {
  using E = typename G::Element;
  std::vector<E> word;
  const auto gens = group.generators();
  E remaining = target;
  while (!group.is_identity(remaining)) {
    std::vector<E> candidates;
    for (const auto& t : gens) {
      if (leq_abs(group, t, remaining)) candidates.push_back(t);
    }
    if (candidates.empty()) throw DomainError("target is not generated by the marked set");
    const E& t = candidates[detail::bounded_uint(rng, candidates.size())];
    word.push_back(t);
    remaining = group.multiply(group.inverse(t), remaining);
  }
  return word;
}

struct RandomPointOptions {
  bool sub_divisor = true;      // drop a random subset of letters first
  long position_steps = 64;     // positions drawn from {0, 1/q, ..., 1}
};

/// Seeded generator for points of the topological poset: a random reduced
/// word of the ambient target, a random subword, a random split into groups,
/// and random distinct rational positions.
template <MarkedGroup G, typename Rng>
TopPoint<typename G::Element> random_top_point(const G& group, const typename G::Element& ambient,
                                               Rng& rng, const RandomPointOptions& options = {}) {
  using E = typename G::Element;
  auto word = random_reduced_word(group, ambient, rng);
  std::vector<E> letters;
  for (const auto& t : word) {
    if (!options.sub_divisor || detail::bounded_uint(rng, 2) == 0) letters.push_back(t);
  }
  // consecutive groups of letters
  std::vector<E> groups;
  for (std::size_t i = 0; i < letters.size(); ++i) {
    if (i == 0 || detail::bounded_uint(rng, 2) == 0) {
      groups.push_back(letters[i]);
    } else {
      groups.back() = group.multiply(groups.back(), letters[i]);
    }
  }
  // distinct sorted positions in [0,1] (endpoints allowed)
  std::set<long> ticks;
  while (ticks.size() < groups.size()) {
    ticks.insert(static_cast<long>(
        detail::bounded_uint(rng, static_cast<std::uint64_t>(options.position_steps) + 1)));
  }
  std::vector<std::pair<Rational, E>> support;
  std::size_t i = 0;
  for (long tick : ticks) {
    support.emplace_back(Rational(tick, options.position_steps), groups[i++]);
  }
  return make_top_point(group, ambient, std::move(support));
}

/// A uniformly random point of the lower set of u (independent choice below
/// each label).
template <MarkedGroup G, typename Rng>
TopPoint<typename G::Element> random_sub_point(const G& group,
                                               const TopPoint<typename G::Element>& u, Rng& rng) {
  using E = typename G::Element;
  std::vector<std::pair<Rational, E>> support;
  for (std::size_t i = 0; i < u.wf.positions.size(); ++i) {
    auto below = interval(group, u.wf.labels[i]);
    support.emplace_back(
        u.wf.positions[i],
        below.elements[detail::bounded_uint(rng, static_cast<std::uint64_t>(below.size()))]);
  }
  return make_top_point(group, u.ambient, std::move(support));
}

}  // namespace ncfact
