#pragma once

#include <algorithm>
#include <deque>
#include <map>
#include <utility>
#include <vector>

#include "ncfact/errors.hpp"
#include "ncfact/marked_group.hpp"

namespace ncfact {

template <MarkedGroup G>
long abs_length(const G& group, const typename G::Element& g) {
  return group.length(g);
}

/// h <= g in the absolute order: lengths add along h, h^{-1}g.
template <MarkedGroup G>
bool leq_abs(const G& group, const typename G::Element& h, const typename G::Element& g) {
  if (!group.in_monoid(h) || !group.in_monoid(g)) return false;
  auto quotient = group.multiply(group.inverse(h), g);
  if (!group.in_monoid(quotient)) return false;
  return group.length(h) + group.length(quotient) == group.length(g);
}

/// The h' with h * h' = g and lengths adding. Requires h <= g.
template <MarkedGroup G>
typename G::Element complement(const G& group, const typename G::Element& h,
                               const typename G::Element& g) {
  if (!leq_abs(group, h, g)) {
    throw OrderError("complement requires h <= g in the absolute order");
  }
  return group.multiply(group.inverse(h), g);
}

/// The interval [1,g]: a bounded graded poset of height length(g), with covers
/// labeled by the length-one quotients h^{-1}h'.
template <MarkedGroup G>
struct IntervalPoset {
  using Element = typename G::Element;

  Element top;
  std::vector<Element> elements;       // sorted by (rank, element order)
  std::vector<long> ranks;             // rank = abs_length
  std::vector<std::pair<int, int>> covers;  // (lower, upper) indices
  std::vector<Element> cover_labels;        // h^{-1}h' per cover
  std::vector<std::vector<bool>> leq;       // full order relation

  int size() const { return static_cast<int>(elements.size()); }
  long height() const { return ranks.empty() ? 0 : ranks.back(); }

  int index_of(const Element& e) const {
    auto it = index_.find(e);
    return it == index_.end() ? -1 : it->second;
  }

  std::vector<long> rank_counts() const {
    std::vector<long> counts(static_cast<std::size_t>(height()) + 1, 0);
    for (long r : ranks) ++counts[static_cast<std::size_t>(r)];
    return counts;
  }

  std::map<Element, int> index_;
};

/// Enumerates [1,g] by searching the ball of radius length(g) in the right
/// Cayley graph, keeping only elements below g. Guarded.
template <MarkedGroup G>
IntervalPoset<G> interval(const G& group, const typename G::Element& g,
                          const SizeGuard& guard = {}) {
  using E = typename G::Element;
  if (!group.in_monoid(g)) throw DomainError("interval target is outside the generated monoid");

  IntervalPoset<G> poset;
  poset.top = g;
  const auto gens = group.generators();

  std::map<E, long> found;
  found.emplace(group.identity(), 0);
  std::deque<E> queue = {group.identity()};
  while (!queue.empty()) {
    E x = queue.front();
    queue.pop_front();
    long rank = found.at(x);
    for (const auto& t : gens) {
      E y = group.multiply(x, t);
      if (found.count(y)) continue;
      if (group.length(y) != rank + 1) continue;
      if (!leq_abs(group, y, g)) continue;
      guard.check(found.size() + 1, "interval");
      found.emplace(y, rank + 1);
      queue.push_back(y);
    }
  }

  poset.elements.reserve(found.size());
  for (const auto& [e, r] : found) poset.elements.push_back(e);
  std::sort(poset.elements.begin(), poset.elements.end(), [&](const E& a, const E& b) {
    long ra = found.at(a), rb = found.at(b);
    return ra != rb ? ra < rb : a < b;
  });
  poset.ranks.reserve(poset.elements.size());
  for (int i = 0; i < poset.size(); ++i) {
    poset.ranks.push_back(found.at(poset.elements[static_cast<std::size_t>(i)]));
    poset.index_.emplace(poset.elements[static_cast<std::size_t>(i)], i);
  }

  const int n = poset.size();
  poset.leq.assign(static_cast<std::size_t>(n), std::vector<bool>(static_cast<std::size_t>(n), false));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (poset.ranks[static_cast<std::size_t>(i)] > poset.ranks[static_cast<std::size_t>(j)]) continue;
      poset.leq[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          leq_abs(group, poset.elements[static_cast<std::size_t>(i)], poset.elements[static_cast<std::size_t>(j)]);
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (poset.ranks[static_cast<std::size_t>(j)] != poset.ranks[static_cast<std::size_t>(i)] + 1) continue;
      if (!poset.leq[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]) continue;
      poset.covers.emplace_back(i, j);
      poset.cover_labels.push_back(group.multiply(group.inverse(poset.elements[static_cast<std::size_t>(i)]),
                                                  poset.elements[static_cast<std::size_t>(j)]));
    }
  }
  return poset;
}

}  // namespace ncfact
