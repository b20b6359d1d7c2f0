#pragma once

#include <concepts>
#include <cstdint>
#include <string>
#include <vector>

#include "ncfact/errors.hpp"
#include "ncfact/permutation.hpp"

namespace ncfact {

/// A group together with a fixed conjugacy-closed generating set and a word
/// length oracle. Everything downstream (intervals, factorization posets,
/// complexes, topological posets) is generic over this concept.
template <typename G>
concept MarkedGroup =
    std::totally_ordered<typename G::Element> && std::copyable<typename G::Element> &&
    requires(const G& g, const typename G::Element& a, const typename G::Element& b) {
      { g.identity() } -> std::convertible_to<typename G::Element>;
      { g.multiply(a, b) } -> std::convertible_to<typename G::Element>;
      { g.inverse(a) } -> std::convertible_to<typename G::Element>;
      { g.is_identity(a) } -> std::convertible_to<bool>;
      { g.in_monoid(a) } -> std::convertible_to<bool>;
      { g.length(a) } -> std::convertible_to<long>;
      { g.generators() } -> std::convertible_to<std::vector<typename G::Element>>;
      { g.to_string(a) } -> std::convertible_to<std::string>;
    };

/// Sym_d marked with the full set of transpositions. Length is the absolute
/// reflection length d - (number of cycles).
class SymmetricGroup {
 public:
  using Element = Permutation;

  explicit SymmetricGroup(int degree) : degree_(degree) {
    if (degree < 1) throw DomainError("symmetric group degree must be positive");
  }

  int degree() const { return degree_; }
  Element identity() const { return Permutation::identity(degree_); }
  Element multiply(const Element& a, const Element& b) const { return a * b; }
  Element inverse(const Element& a) const { return a.inverse(); }
  bool is_identity(const Element& a) const { return a.is_identity(); }
  bool in_monoid(const Element&) const { return true; }

  long length(const Element& a) const { return degree_ - a.cycle_count(); }

  std::vector<Element> generators() const {
    std::vector<Element> out;
    for (int i = 1; i < degree_; ++i) {
      for (int j = i + 1; j <= degree_; ++j) out.push_back(Permutation::transposition(degree_, i, j));
    }
    return out;
  }

  std::string to_string(const Element& a) const { return a.to_cycle_string(); }

 private:
  int degree_;
};

/// The integers marked with {1}. Only the nonnegative part lies in the
/// generated monoid; length(n) = n there.
class IntegerGroup {
 public:
  using Element = long long;

  Element identity() const { return 0; }
  Element multiply(Element a, Element b) const { return a + b; }
  Element inverse(Element a) const { return -a; }
  bool is_identity(Element a) const { return a == 0; }
  bool in_monoid(Element a) const { return a >= 0; }

  long length(Element a) const {
    if (a < 0) throw DomainError("negative integer is outside the monoid generated by {1}");
    return static_cast<long>(a);
  }

  std::vector<Element> generators() const { return {1}; }

  std::string to_string(Element a) const { return std::to_string(a); }
};

/// A finite group presented by its multiplication table, marked with an
/// explicit generating set. Lengths come from a breadth-first search over the
/// right Cayley graph; the constructor checks that the generating set is
/// closed under conjugation by every group element.
class TableGroup {
 public:
  using Element = int;  // index into the element table

  TableGroup(std::vector<std::vector<int>> multiplication, int identity_index,
             std::vector<int> generator_indices, std::vector<std::string> names = {});

  /// Builds the table for the subgroup generated by a marked group's
  /// generating set (the whole group for the instances used here).
  template <MarkedGroup G>
  static TableGroup from_group(const G& group);

  int order() const { return static_cast<int>(mult_.size()); }
  Element identity() const { return identity_; }
  Element multiply(Element a, Element b) const { return mult_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]; }
  Element inverse(Element a) const { return inv_[static_cast<std::size_t>(a)]; }
  bool is_identity(Element a) const { return a == identity_; }
  bool in_monoid(Element a) const { return lengths_[static_cast<std::size_t>(a)] >= 0; }

  long length(Element a) const {
    long len = lengths_[static_cast<std::size_t>(a)];
    if (len < 0) throw DomainError("element is outside the generated monoid");
    return len;
  }

  std::vector<Element> generators() const { return generators_; }
  std::string to_string(Element a) const { return names_[static_cast<std::size_t>(a)]; }

 private:
  void compute_lengths();
  void verify_group_axioms() const;
  void verify_conjugacy_closed() const;

  std::vector<std::vector<int>> mult_;
  int identity_ = 0;
  std::vector<int> inv_;
  std::vector<int> generators_;
  std::vector<long> lengths_;  // -1 when unreachable from the identity
  std::vector<std::string> names_;
};

template <MarkedGroup G>
TableGroup TableGroup::from_group(const G& group) {
  using E = typename G::Element;
  std::vector<E> elements = {group.identity()};
  auto gens = group.generators();
  // closure under right multiplication by generators and inverses
  std::vector<E> frontier = elements;
  auto find_index = [&elements](const E& e) -> int {
    for (std::size_t i = 0; i < elements.size(); ++i) {
      if (elements[i] == e) return static_cast<int>(i);
    }
    return -1;
  };
  while (!frontier.empty()) {
    std::vector<E> next;
    for (const auto& x : frontier) {
      for (const auto& t : gens) {
        for (const E& y : {group.multiply(x, t), group.multiply(x, group.inverse(t))}) {
          if (find_index(y) < 0) {
            elements.push_back(y);
            next.push_back(y);
          }
        }
      }
    }
    frontier = std::move(next);
  }

  const int n = static_cast<int>(elements.size());
  std::vector<std::vector<int>> mult(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      int k = find_index(group.multiply(elements[static_cast<std::size_t>(i)], elements[static_cast<std::size_t>(j)]));
      if (k < 0) throw DomainError("closure is not multiplicatively closed");
      mult[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = k;
    }
  }
  std::vector<int> generator_indices;
  for (const auto& t : gens) generator_indices.push_back(find_index(t));
  std::vector<std::string> names;
  names.reserve(static_cast<std::size_t>(n));
  for (const auto& e : elements) names.push_back(group.to_string(e));
  return TableGroup(std::move(mult), 0, std::move(generator_indices), std::move(names));
}

static_assert(MarkedGroup<SymmetricGroup>);
static_assert(MarkedGroup<IntegerGroup>);
static_assert(MarkedGroup<TableGroup>);

/// g x g^{-1}.
template <MarkedGroup G>
typename G::Element conjugate(const G& group, const typename G::Element& g,
                              const typename G::Element& x) {
  return group.multiply(group.multiply(g, x), group.inverse(g));
}

/// Disjoint cycle list, fixed points on request.
inline std::vector<std::vector<int>> cycle_decomposition(const Permutation& p,
                                                         bool include_fixed_points = false) {
  return p.cycles(include_fixed_points);
}

}  // namespace ncfact
