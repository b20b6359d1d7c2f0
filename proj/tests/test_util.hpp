#pragma once

// Shared test oracles. Everything here is deliberately independent of the
// library's enumeration paths: plain recursions and brute-force searches used
// to freeze expected values.

#include <algorithm>
#include <cstdint>
#include <deque>
#include <map>
#include <set>
#include <vector>

#include "ncfact/marked_group.hpp"
#include "ncfact/permutation.hpp"
#include "ncfact/set_partition.hpp"

namespace ncfact::test {

/// Catalan numbers by the convolution recurrence C_{n+1} = sum C_i C_{n-i}.
inline long long catalan(int n) {
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

/// Word length of p over all transpositions, by BFS in the Cayley graph.
inline int bfs_transposition_length(const Permutation& p) {
  const int d = p.degree();
  std::vector<Permutation> gens;
  for (int i = 1; i < d; ++i) {
    for (int j = i + 1; j <= d; ++j) gens.push_back(Permutation::transposition(d, i, j));
  }
  std::map<Permutation, int> dist;
  dist.emplace(Permutation::identity(d), 0);
  std::deque<Permutation> queue = {Permutation::identity(d)};
  while (!queue.empty()) {
    Permutation x = queue.front();
    queue.pop_front();
    if (x == p) return dist.at(x);
    for (const auto& t : gens) {
      Permutation y = x * t;
      if (!dist.count(y)) {
        dist.emplace(y, dist.at(x) + 1);
        queue.push_back(y);
      }
    }
  }
  return -1;
}

/// All elements of Sym_d.
inline std::vector<Permutation> all_permutations(int d) {
  std::vector<int> one_line(static_cast<std::size_t>(d));
  for (int i = 0; i < d; ++i) one_line[static_cast<std::size_t>(i)] = i + 1;
  std::vector<Permutation> out;
  do {
    out.push_back(Permutation::from_one_line(one_line));
  } while (std::next_permutation(one_line.begin(), one_line.end()));
  return out;
}

/// All minimal-length transposition words for g, by depth-first search.
inline void reduced_words_rec(const SymmetricGroup& group, const Permutation& remaining,
                              std::vector<Permutation>& word,
                              std::vector<std::vector<Permutation>>& out) {
  if (remaining.is_identity()) {
    out.push_back(word);
    return;
  }
  for (const auto& t : group.generators()) {
    if (group.length(group.multiply(t, remaining)) == group.length(remaining) - 1) {
      // peel t off the left so the word multiplies left-to-right to g
      word.push_back(t);
      reduced_words_rec(group, group.multiply(group.inverse(t), remaining), word, out);
      word.pop_back();
    }
  }
}

inline std::vector<std::vector<Permutation>> reduced_words(const SymmetricGroup& group,
                                                           const Permutation& g) {
  std::vector<std::vector<Permutation>> out;
  std::vector<Permutation> word;
  reduced_words_rec(group, g, word, out);
  return out;
}

/// All partitions of {1,...,m} via restricted growth strings.
inline std::vector<SetPartition> all_set_partitions(int m) {
  std::vector<SetPartition> out;
  std::vector<int> rgs(static_cast<std::size_t>(m), 0);
  while (true) {
    int max_label = 0;
    for (int v : rgs) max_label = std::max(max_label, v);
    std::vector<std::vector<int>> blocks(static_cast<std::size_t>(max_label) + 1);
    for (int i = 0; i < m; ++i) blocks[static_cast<std::size_t>(rgs[static_cast<std::size_t>(i)])].push_back(i + 1);
    out.emplace_back(m, blocks);
    // next restricted growth string
    int i = m - 1;
    for (; i > 0; --i) {
      int cap = 0;
      for (int j = 0; j < i; ++j) cap = std::max(cap, rgs[static_cast<std::size_t>(j)]);
      if (rgs[static_cast<std::size_t>(i)] <= cap) {
        ++rgs[static_cast<std::size_t>(i)];
        break;
      }
      rgs[static_cast<std::size_t>(i)] = 0;
    }
    if (i == 0) break;
  }
  return out;
}

/// Deterministic bounded uniform integer in [0, n), independent of libstdc++
/// distribution internals.
template <typename Rng>
std::uint64_t bounded(Rng& rng, std::uint64_t n) {
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n);
  std::uint64_t v;
  do {
    v = rng();
  } while (v >= limit);
  return v % n;
}

}  // namespace ncfact::test
