#pragma once

#include <algorithm>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "ncfact/errors.hpp"
#include "ncfact/interval.hpp"
#include "ncfact/marked_group.hpp"

namespace ncfact {

/// Row vector [x_L x_1 ... x_k x_R] with nontrivial interior entries whose
/// ordered product is the target and whose lengths add up to length(target).
/// The endpoint entries may be trivial. Rank is the interior entry count k.
template <typename E>
struct LinearFactorization {
  E target;
  std::vector<E> entries;  // size >= 2

  int inner_count() const { return static_cast<int>(entries.size()) - 2; }
  bool operator==(const LinearFactorization&) const = default;
};

/// Equivalence class of linear factorizations with the same interior, folded
/// at the endpoints; canonically [z_L | x_1 ... x_k | 1] with
/// z_L = g x_R g^{-1} x_L.
template <typename E>
struct CircularFactorization {
  E target;
  E z_left;
  std::vector<E> inner;

  int inner_count() const { return static_cast<int>(inner.size()); }
  bool operator==(const CircularFactorization&) const = default;
  auto operator<=>(const CircularFactorization&) const = default;
};

/// Linear and circular compositions are the integer instances.
using Composition = LinearFactorization<IntegerGroup::Element>;
using CircularComposition = CircularFactorization<IntegerGroup::Element>;

template <MarkedGroup G>
std::string linear_text(const G& group, const LinearFactorization<typename G::Element>& f) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < f.entries.size(); ++i) {
    if (i) os << ' ';
    os << group.to_string(f.entries[i]);
  }
  os << ']';
  return os.str();
}

template <MarkedGroup G>
std::string circular_text(const G& group, const CircularFactorization<typename G::Element>& c) {
  std::ostringstream os;
  os << '[' << group.to_string(c.z_left) << ' ';
  if (c.inner.empty()) {
    os << "||";
  } else {
    os << '|';
    for (const auto& x : c.inner) os << ' ' << group.to_string(x);
    os << " |";
  }
  os << ' ' << group.to_string(group.identity()) << ']';
  return os.str();
}

template <MarkedGroup G>
bool is_valid_linear(const G& group, const LinearFactorization<typename G::Element>& f) {
  if (f.entries.size() < 2) return false;
  long total = 0;
  auto product = group.identity();
  for (std::size_t i = 0; i < f.entries.size(); ++i) {
    const auto& x = f.entries[i];
    if (!group.in_monoid(x)) return false;
    if (i > 0 && i + 1 < f.entries.size() && group.is_identity(x)) return false;
    total += group.length(x);
    product = group.multiply(product, x);
  }
  return product == f.target && total == group.length(f.target);
}

/// Replaces (x_i, x_{i+1}) by their product. Positions run 0..k; merging a
/// length-two vector is an error.
template <MarkedGroup G>
LinearFactorization<typename G::Element> merge(const G& group,
                                               const LinearFactorization<typename G::Element>& f,
                                               int position) {
  const int k = f.inner_count();
  if (k < 1) throw MergeError("merge would leave fewer than two entries");
  if (position < 0 || position > k) throw MergeError("merge position out of range");
  LinearFactorization<typename G::Element> out;
  out.target = f.target;
  out.entries.reserve(f.entries.size() - 1);
  for (int i = 0; i < static_cast<int>(f.entries.size()); ++i) {
    if (i == position) {
      out.entries.push_back(group.multiply(f.entries[static_cast<std::size_t>(i)],
                                           f.entries[static_cast<std::size_t>(i + 1)]));
      ++i;
    } else {
      out.entries.push_back(f.entries[static_cast<std::size_t>(i)]);
    }
  }
  return out;
}

/// f = [x_L x_1 ... x_k x_R]  ->  the chain x_L <= x_L x_1 <= ... <= x_L...x_k.
template <MarkedGroup G>
std::vector<typename G::Element> chain_iso(const G& group,
                                           const LinearFactorization<typename G::Element>& f) {
  std::vector<typename G::Element> chain;
  chain.reserve(f.entries.size() - 1);
  auto acc = group.identity();
  for (std::size_t i = 0; i + 1 < f.entries.size(); ++i) {
    acc = group.multiply(acc, f.entries[i]);
    chain.push_back(acc);
  }
  return chain;
}

/// Chain y_0 < ... < y_k in [1,g]  ->  [y_0, y_0^{-1}y_1, ..., y_k^{-1}g].
template <MarkedGroup G>
LinearFactorization<typename G::Element> chain_iso_inv(
    const G& group, const std::vector<typename G::Element>& chain,
    const typename G::Element& g) {
  if (chain.empty()) throw DomainError("chain_iso_inv needs a nonempty chain");
  for (std::size_t i = 0; i < chain.size(); ++i) {
    if (!leq_abs(group, chain[i], g)) throw DomainError("chain leaves the interval [1,g]");
    if (i > 0) {
      if (chain[i - 1] == chain[i] || !leq_abs(group, chain[i - 1], chain[i])) {
        throw DomainError("chain is not strictly increasing");
      }
    }
  }
  LinearFactorization<typename G::Element> out;
  out.target = g;
  out.entries.push_back(chain.front());
  for (std::size_t i = 1; i < chain.size(); ++i) {
    out.entries.push_back(group.multiply(group.inverse(chain[i - 1]), chain[i]));
  }
  out.entries.push_back(group.multiply(group.inverse(chain.back()), g));
  return out;
}

/// The quotient map q: fold the endpoints through the target.
template <MarkedGroup G>
CircularFactorization<typename G::Element> circularize(
    const G& group, const LinearFactorization<typename G::Element>& f) {
  CircularFactorization<typename G::Element> out;
  out.target = f.target;
  out.z_left = group.multiply(
      group.multiply(group.multiply(f.target, f.entries.back()), group.inverse(f.target)),
      f.entries.front());
  out.inner.assign(f.entries.begin() + 1, f.entries.end() - 1);
  return out;
}

/// Entrywise length, landing in the linear compositions of length(target).
template <MarkedGroup G>
Composition length_map_L(const G& group, const LinearFactorization<typename G::Element>& f) {
  Composition out;
  out.target = group.length(f.target);
  out.entries.reserve(f.entries.size());
  for (const auto& x : f.entries) out.entries.push_back(group.length(x));
  return out;
}

template <MarkedGroup G>
CircularComposition length_map_Lbar(const G& group,
                                    const CircularFactorization<typename G::Element>& c) {
  CircularComposition out;
  out.target = group.length(c.target);
  out.z_left = group.length(c.z_left);
  out.inner.reserve(c.inner.size());
  for (const auto& x : c.inner) out.inner.push_back(group.length(x));
  return out;
}

/// Isometry class of the orthoscheme face labeled by a composition: the tuple
/// of interior entries.
inline std::vector<long long> face_shape(const Composition& c) {
  return std::vector<long long>(c.entries.begin() + 1, c.entries.end() - 1);
}

/// The graded poset of all linear factorizations of g, ordered by merging.
/// Elements are kept in canonical order: rank-major, then text form.
template <MarkedGroup G>
struct FactorizationPoset {
  using E = typename G::Element;

  E target;
  IntervalPoset<G> base;                          // [1, g]
  std::vector<LinearFactorization<E>> elements;
  std::vector<std::vector<int>> chains;           // interval indices per element
  std::vector<int> ranks;
  std::vector<std::string> keys;
  std::vector<std::pair<int, int>> covers;        // (lower, upper)
  std::vector<long> rank_counts;

  int size() const { return static_cast<int>(elements.size()); }
  int height() const { return static_cast<int>(rank_counts.size()) - 1; }

  int index_of_chain(const std::vector<int>& chain) const {
    auto it = chain_index_.find(chain);
    return it == chain_index_.end() ? -1 : it->second;
  }
  int index_of(const G& group, const LinearFactorization<E>& f) const {
    std::vector<int> chain;
    for (const auto& y : chain_iso(group, f)) {
      int idx = base.index_of(y);
      if (idx < 0) return -1;
      chain.push_back(idx);
    }
    return index_of_chain(chain);
  }
  /// Facet reached by merging at the given position.
  int facet(int element, int position) const {
    std::vector<int> sub = chains[static_cast<std::size_t>(element)];
    sub.erase(sub.begin() + position);
    return index_of_chain(sub);
  }

  std::map<std::vector<int>, int> chain_index_;
};

/// Enumerates Fact(G,g,I) by walking the nonempty chains of [1,g]; merges
/// correspond to removing chain elements.
template <MarkedGroup G>
FactorizationPoset<G> enumerate_linear(const G& group, const typename G::Element& g,
                                       const SizeGuard& guard = {}) {
  using E = typename G::Element;
  FactorizationPoset<G> poset;
  poset.target = g;
  poset.base = interval(group, g, guard);

  std::vector<std::vector<int>> chains;
  std::vector<int> current;
  const int n = poset.base.size();
  auto extend = [&](auto&& self, int last) -> void {
    guard.check(chains.size(), "enumerate_linear");
    chains.push_back(current);
    for (int j = last + 1; j < n; ++j) {
      if (last < 0 || poset.base.leq[static_cast<std::size_t>(last)][static_cast<std::size_t>(j)]) {
        current.push_back(j);
        self(self, j);
        current.pop_back();
      }
    }
  };
  for (int i = 0; i < n; ++i) {
    current.push_back(i);
    extend(extend, i);
    current.pop_back();
  }

  std::vector<std::pair<std::pair<int, std::string>, std::vector<int>>> keyed;
  keyed.reserve(chains.size());
  for (auto& chain : chains) {
    std::vector<E> elems;
    elems.reserve(chain.size());
    for (int idx : chain) elems.push_back(poset.base.elements[static_cast<std::size_t>(idx)]);
    auto fact = chain_iso_inv(group, elems, g);
    keyed.push_back({{fact.inner_count(), linear_text(group, fact)}, std::move(chain)});
  }
  std::sort(keyed.begin(), keyed.end());

  poset.elements.reserve(keyed.size());
  for (int i = 0; i < static_cast<int>(keyed.size()); ++i) {
    auto& [key, chain] = keyed[static_cast<std::size_t>(i)];
    std::vector<E> elems;
    for (int idx : chain) elems.push_back(poset.base.elements[static_cast<std::size_t>(idx)]);
    poset.elements.push_back(chain_iso_inv(group, elems, g));
    poset.ranks.push_back(key.first);
    poset.keys.push_back(key.second);
    poset.chain_index_.emplace(chain, i);
    poset.chains.push_back(std::move(chain));
  }

  poset.rank_counts.assign(static_cast<std::size_t>(poset.ranks.empty() ? 0 : poset.ranks.back()) + 1, 0);
  for (int r : poset.ranks) ++poset.rank_counts[static_cast<std::size_t>(r)];

  for (int i = 0; i < poset.size(); ++i) {
    const auto& chain = poset.chains[static_cast<std::size_t>(i)];
    if (chain.size() < 2) continue;
    for (int pos = 0; pos < static_cast<int>(chain.size()); ++pos) {
      poset.covers.emplace_back(poset.facet(i, pos), i);
    }
  }
  std::sort(poset.covers.begin(), poset.covers.end());
  return poset;
}

/// The quotient poset Fact(G,g,S): circular classes with the projected cover
/// relation. Ranks are preserved by the projection.
template <MarkedGroup G>
struct CircularPoset {
  using E = typename G::Element;

  E target;
  std::vector<CircularFactorization<E>> elements;
  std::vector<int> ranks;
  std::vector<std::string> keys;
  std::vector<std::pair<int, int>> covers;
  std::vector<long> rank_counts;
  std::vector<int> linear_to_circular;  // indexed like the linear poset

  int size() const { return static_cast<int>(elements.size()); }

  int index_of(const CircularFactorization<E>& c) const {
    auto it = index_.find(c);
    return it == index_.end() ? -1 : it->second;
  }

  std::vector<int> covers_above(int i) const {
    std::vector<int> out;
    for (const auto& [lo, hi] : covers) {
      if (lo == i) out.push_back(hi);
    }
    return out;
  }

  /// Order relation via reachability through covers.
  bool leq(int i, int j) const {
    if (i == j) return true;
    std::vector<int> stack = {i};
    std::vector<bool> seen(static_cast<std::size_t>(size()), false);
    seen[static_cast<std::size_t>(i)] = true;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (int up : covers_above(x)) {
        if (up == j) return true;
        if (!seen[static_cast<std::size_t>(up)]) {
          seen[static_cast<std::size_t>(up)] = true;
          stack.push_back(up);
        }
      }
    }
    return false;
  }

  std::map<CircularFactorization<E>, int> index_;
};

template <MarkedGroup G>
CircularPoset<G> enumerate_circular(const G& group, const typename G::Element& g,
                                    const SizeGuard& guard = {}) {
  auto linear = enumerate_linear(group, g, guard);
  return enumerate_circular(group, linear);
}

template <MarkedGroup G>
CircularPoset<G> enumerate_circular(const G& group, const FactorizationPoset<G>& linear) {
  using E = typename G::Element;
  CircularPoset<G> poset;
  poset.target = linear.target;

  std::vector<CircularFactorization<E>> reps;
  for (const auto& f : linear.elements) {
    auto c = circularize(group, f);
    if (std::find(reps.begin(), reps.end(), c) == reps.end()) reps.push_back(std::move(c));
  }
  std::sort(reps.begin(), reps.end(), [&](const auto& a, const auto& b) {
    if (a.inner_count() != b.inner_count()) return a.inner_count() < b.inner_count();
    return circular_text(group, a) < circular_text(group, b);
  });
  for (int i = 0; i < static_cast<int>(reps.size()); ++i) {
    poset.ranks.push_back(reps[static_cast<std::size_t>(i)].inner_count());
    poset.keys.push_back(circular_text(group, reps[static_cast<std::size_t>(i)]));
    poset.index_.emplace(reps[static_cast<std::size_t>(i)], i);
    poset.elements.push_back(std::move(reps[static_cast<std::size_t>(i)]));
  }

  poset.rank_counts.assign(static_cast<std::size_t>(poset.ranks.empty() ? 0 : poset.ranks.back()) + 1, 0);
  for (int r : poset.ranks) ++poset.rank_counts[static_cast<std::size_t>(r)];

  poset.linear_to_circular.reserve(static_cast<std::size_t>(linear.size()));
  for (const auto& f : linear.elements) {
    poset.linear_to_circular.push_back(poset.index_of(circularize(group, f)));
  }

  for (const auto& [lo, hi] : linear.covers) {
    std::pair<int, int> edge{poset.linear_to_circular[static_cast<std::size_t>(lo)],
                             poset.linear_to_circular[static_cast<std::size_t>(hi)]};
    poset.covers.push_back(edge);
  }
  std::sort(poset.covers.begin(), poset.covers.end());
  poset.covers.erase(std::unique(poset.covers.begin(), poset.covers.end()), poset.covers.end());
  return poset;
}

/// All linear factorizations belonging to a circular class: the interior is
/// fixed and the endpoint split (x_L, x_R) ranges over the compatible pairs.
template <MarkedGroup G>
std::vector<LinearFactorization<typename G::Element>> class_representatives(
    const G& group, const CircularFactorization<typename G::Element>& c) {
  using E = typename G::Element;
  std::vector<LinearFactorization<E>> out;
  auto candidates = interval(group, c.target);
  for (const auto& x_right : candidates.elements) {
    if (group.length(x_right) > group.length(c.z_left)) continue;
    // z_L = g x_R g^{-1} x_L  =>  x_L = g x_R^{-1} g^{-1} z_L
    E x_left = group.multiply(
        group.multiply(group.multiply(c.target, group.inverse(x_right)), group.inverse(c.target)),
        c.z_left);
    LinearFactorization<E> f;
    f.target = c.target;
    f.entries.push_back(x_left);
    for (const auto& x : c.inner) f.entries.push_back(x);
    f.entries.push_back(x_right);
    if (is_valid_linear(group, f)) out.push_back(std::move(f));
  }
  return out;
}

}  // namespace ncfact
