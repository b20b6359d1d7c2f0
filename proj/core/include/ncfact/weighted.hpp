#pragma once

#include <cmath>
#include <sstream>
#include <utility>
#include <vector>

#include "ncfact/errors.hpp"
#include "ncfact/factorization.hpp"
#include "ncfact/rational.hpp"

namespace ncfact {

inline std::string position_to_string(const Rational& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return rational_to_string(r);
}

/// A point of the order complex: group elements attached to finitely many
/// exact rational positions in [0,1]. Both endpoints are always present (their
/// labels may be trivial); interior labels are nontrivial; the extracted
/// support vector is a valid linear factorization of the target.
template <typename E>
struct WeightedLinearFactorization {
  E target;
  std::vector<Rational> positions;
  std::vector<E> labels;

  int inner_count() const { return static_cast<int>(positions.size()) - 2; }
  bool operator==(const WeightedLinearFactorization&) const = default;
};

/// Canonical point of the interval complex: the endpoint labels folded into
/// position 0 (z_L = g x_R g^{-1} x_L), trailing label implicitly trivial.
template <typename E>
struct WeightedCircularFactorization {
  E target;
  E base_label;                     // label at position 0
  std::vector<Rational> positions;  // interior support, strictly inside (0,1)
  std::vector<E> labels;            // nontrivial

  bool operator==(const WeightedCircularFactorization&) const = default;
};

/// Builds a weighted linear factorization from (position, label) pairs.
/// Missing endpoints get trivial labels; trivial interior labels are dropped.
template <MarkedGroup G>
WeightedLinearFactorization<typename G::Element> make_weighted(
    const G& group, const typename G::Element& target,
    std::vector<std::pair<Rational, typename G::Element>> support) {
  using E = typename G::Element;
  std::sort(support.begin(), support.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  WeightedLinearFactorization<E> out;
  out.target = target;
  bool has_zero = false, has_one = false;
  for (auto& [pos, label] : support) {
    if (pos < 0 || pos > 1) throw DomainError("weighted position outside [0,1]");
    if (!out.positions.empty() && out.positions.back() == pos) {
      throw DomainError("duplicate weighted position");
    }
    if (pos == 0) has_zero = true;
    if (pos == 1) has_one = true;
    if (pos != 0 && pos != 1 && group.is_identity(label)) continue;
    out.positions.push_back(pos);
    out.labels.push_back(std::move(label));
  }
  if (!has_zero) {
    out.positions.insert(out.positions.begin(), Rational(0));
    out.labels.insert(out.labels.begin(), group.identity());
  }
  if (!has_one) {
    out.positions.push_back(Rational(1));
    out.labels.push_back(group.identity());
  }
  LinearFactorization<E> p{target, out.labels};
  if (!is_valid_linear(group, p)) {
    throw DomainError("support vector is not a linear factorization of the target");
  }
  return out;
}

/// P: strip the positions.
template <typename E>
LinearFactorization<E> support_vector_P(const WeightedLinearFactorization<E>& u) {
  return LinearFactorization<E>{u.target, u.labels};
}

/// Ordered product of the labels of any finitely supported multiset, left to
/// right by position.
template <MarkedGroup G>
typename G::Element rho(const G& group,
                        const std::vector<std::pair<Rational, typename G::Element>>& support) {
  auto sorted = support;
  std::sort(sorted.begin(), sorted.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  auto acc = group.identity();
  for (const auto& [pos, label] : sorted) acc = group.multiply(acc, label);
  return acc;
}

template <MarkedGroup G>
typename G::Element rho(const G& group, const WeightedLinearFactorization<typename G::Element>& u) {
  auto acc = group.identity();
  for (const auto& label : u.labels) acc = group.multiply(acc, label);
  return acc;
}

/// Entrywise length: the weighted composition L(u) = l o u.
template <MarkedGroup G>
WeightedLinearFactorization<long long> weighted_length_map(
    const G& group, const WeightedLinearFactorization<typename G::Element>& u) {
  WeightedLinearFactorization<long long> out;
  out.target = group.length(u.target);
  out.positions = u.positions;
  out.labels.reserve(u.labels.size());
  for (const auto& x : u.labels) out.labels.push_back(group.length(x));
  return out;
}

/// A weighted composition of n as a point of the standard n-orthoscheme
/// 0 <= x_1 <= ... <= x_n <= 1: each position contributes weight-many copies
/// of itself.
inline std::vector<Rational> ortho_coordinates(const WeightedLinearFactorization<long long>& w) {
  std::vector<Rational> out;
  for (std::size_t i = 0; i < w.positions.size(); ++i) {
    for (long long c = 0; c < w.labels[i]; ++c) out.push_back(w.positions[i]);
  }
  return out;
}

/// Euclidean distance inside a shared closed simplex, through the pullback of
/// the orthoscheme metric. Points in different simplices are out of scope:
/// only within-simplex distances are defined here.
template <MarkedGroup G>
double simplex_distance(const G& group, const WeightedLinearFactorization<typename G::Element>& u,
                        const WeightedLinearFactorization<typename G::Element>& v) {
  if (!(u.target == v.target)) {
    throw MetricScopeError("points lie in complexes of different targets");
  }
  auto cu = chain_iso(group, support_vector_P(u));
  auto cv = chain_iso(group, support_vector_P(v));
  // The two cells share a closed simplex iff the union of their chains is a
  // chain again.
  for (const auto& x : cu) {
    for (const auto& y : cv) {
      if (!(leq_abs(group, x, y) || leq_abs(group, y, x))) {
        throw MetricScopeError("points do not share a closed simplex");
      }
    }
  }
  auto a = ortho_coordinates(weighted_length_map(group, u));
  auto b = ortho_coordinates(weighted_length_map(group, v));
  Rational sum = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    Rational diff = a[i] - b[i];
    sum += diff * diff;
  }
  return std::sqrt(rational_to_double(sum));
}

/// Folds the endpoint labels of a representative into the canonical circular
/// form 0^{g x_R g^{-1} x_L} s_1^{x_1} ... s_k^{x_k} 1^1.
template <MarkedGroup G>
WeightedCircularFactorization<typename G::Element> circular_normalize(
    const G& group, const WeightedLinearFactorization<typename G::Element>& u) {
  WeightedCircularFactorization<typename G::Element> out;
  out.target = u.target;
  out.base_label = group.multiply(
      group.multiply(group.multiply(u.target, u.labels.back()), group.inverse(u.target)),
      u.labels.front());
  out.positions.assign(u.positions.begin() + 1, u.positions.end() - 1);
  out.labels.assign(u.labels.begin() + 1, u.labels.end() - 1);
  return out;
}

/// Canonical linear representative of a circular point (x_R trivial).
template <MarkedGroup G>
WeightedLinearFactorization<typename G::Element> circular_representative(
    const G& group, const WeightedCircularFactorization<typename G::Element>& c) {
  std::vector<std::pair<Rational, typename G::Element>> support;
  support.emplace_back(Rational(0), c.base_label);
  for (std::size_t i = 0; i < c.positions.size(); ++i) support.emplace_back(c.positions[i], c.labels[i]);
  support.emplace_back(Rational(1), group.identity());
  return make_weighted(group, c.target, std::move(support));
}

/// Translates a point of the column x_1 <= ... <= x_n <= x_1 + 1 into the
/// standard orthoscheme via the glide map T(x) = (x_2,...,x_n,x_1+1).
inline std::vector<Rational> column_normalize(std::vector<Rational> x) {
  if (x.empty()) return x;
  for (std::size_t i = 1; i < x.size(); ++i) {
    if (x[i - 1] > x[i]) throw DomainError("malformed column point: not sorted");
  }
  if (x.back() > x.front() + 1) throw DomainError("malformed column point: spread exceeds 1");
  auto apply_t = [](std::vector<Rational>& v) {
    Rational first = v.front();
    v.erase(v.begin());
    v.push_back(first + 1);
  };
  auto apply_t_inv = [](std::vector<Rational>& v) {
    Rational last = v.back();
    v.pop_back();
    v.insert(v.begin(), last - 1);
  };
  while (x.back() > 1) apply_t_inv(x);
  while (x.front() < 0) apply_t(x);
  return x;
}

template <MarkedGroup G>
std::string weighted_text(const G& group, const WeightedLinearFactorization<typename G::Element>& u) {
  std::ostringstream os;
  for (std::size_t i = 0; i < u.positions.size(); ++i) {
    if (i) os << ' ';
    os << position_to_string(u.positions[i]) << '^' << group.to_string(u.labels[i]);
  }
  return os.str();
}

}  // namespace ncfact
