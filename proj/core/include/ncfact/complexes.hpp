#pragma once

#include <array>
#include <numeric>
#include <string>
#include <vector>

#include "ncfact/factorization.hpp"
#include "ncfact/weighted.hpp"

namespace ncfact {

/// Cell tables of a Delta-complex: counts per dimension, facet incidences
/// (cell, facet, merge position), Euler characteristic, and the number of
/// connected components of each skeleton.
struct ComplexSummary {
  std::vector<long long> dims;
  std::vector<std::array<long long, 3>> faces;
  long long euler = 0;
  std::vector<long long> skeleton_components;
  std::vector<std::string> labels;
  std::vector<int> cell_dims;

  long long cell_count() const {
    return std::accumulate(dims.begin(), dims.end(), 0LL);
  }
  bool operator==(const ComplexSummary&) const = default;
};

namespace detail {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void merge(std::size_t a, std::size_t b) { parent_[find(a)] = find(b); }

 private:
  std::vector<std::size_t> parent_;
};

/// Component counts of the j-skeletons, connecting each cell to its facets.
inline std::vector<long long> skeleton_components(const std::vector<int>& cell_dims,
                                                  const std::vector<std::array<long long, 3>>& faces,
                                                  int top_dim) {
  std::vector<long long> out;
  for (int limit = 0; limit <= top_dim; ++limit) {
    UnionFind uf(cell_dims.size());
    for (const auto& [cell, facet, position] : faces) {
      if (cell_dims[static_cast<std::size_t>(cell)] <= limit) {
        uf.merge(static_cast<std::size_t>(cell), static_cast<std::size_t>(facet));
      }
    }
    std::vector<bool> seen(cell_dims.size(), false);
    long long count = 0;
    for (std::size_t i = 0; i < cell_dims.size(); ++i) {
      if (cell_dims[i] > limit) continue;
      std::size_t root = uf.find(i);
      if (!seen[root]) {
        seen[root] = true;
        ++count;
      }
    }
    out.push_back(count);
  }
  return out;
}

inline long long alternating_sum(const std::vector<long long>& dims) {
  long long out = 0;
  for (std::size_t j = 0; j < dims.size(); ++j) out += (j % 2 == 0 ? dims[j] : -dims[j]);
  return out;
}

}  // namespace detail

/// The order complex O_g: cells are the linear factorizations, the facets of a
/// k-cell are its k+1 merges.
template <MarkedGroup G>
struct OrderComplex {
  FactorizationPoset<G> poset;
  ComplexSummary summary;
};

template <MarkedGroup G>
OrderComplex<G> build_order_complex(const G& group, const typename G::Element& g,
                                    const SizeGuard& guard = {}) {
  OrderComplex<G> out;
  out.poset = enumerate_linear(group, g, guard);
  out.summary.dims.assign(out.poset.rank_counts.begin(), out.poset.rank_counts.end());
  out.summary.labels = out.poset.keys;
  out.summary.cell_dims = out.poset.ranks;
  for (int i = 0; i < out.poset.size(); ++i) {
    const int k = out.poset.ranks[static_cast<std::size_t>(i)];
    for (int pos = 0; pos <= k && k >= 1; ++pos) {
      out.summary.faces.push_back({i, out.poset.facet(i, pos), pos});
    }
  }
  out.summary.euler = detail::alternating_sum(out.summary.dims);
  out.summary.skeleton_components =
      detail::skeleton_components(out.summary.cell_dims, out.summary.faces, out.poset.height());
  return out;
}

/// The interval complex K_g = q(O_g): cells are circular classes, facets come
/// from merging any representative. The build checks that the facet of a class
/// does not depend on the representative.
template <MarkedGroup G>
struct IntervalComplex {
  CircularPoset<G> poset;
  ComplexSummary summary;
  std::vector<int> identification;  // O_g cell id -> K_g cell id
};

template <MarkedGroup G>
IntervalComplex<G> build_interval_complex(const G& group, const typename G::Element& g,
                                          const SizeGuard& guard = {}) {
  IntervalComplex<G> out;
  auto linear = enumerate_linear(group, g, guard);
  out.poset = enumerate_circular(group, linear);
  out.identification = out.poset.linear_to_circular;
  out.summary.dims.assign(out.poset.rank_counts.begin(), out.poset.rank_counts.end());
  out.summary.labels = out.poset.keys;
  out.summary.cell_dims = out.poset.ranks;

  // facets via the canonical representative [z_L x_1 ... x_k 1]
  auto facet_of = [&](const CircularFactorization<typename G::Element>& c, int pos) {
    LinearFactorization<typename G::Element> rep;
    rep.target = c.target;
    rep.entries.push_back(c.z_left);
    for (const auto& x : c.inner) rep.entries.push_back(x);
    rep.entries.push_back(group.identity());
    int facet = out.poset.index_of(circularize(group, merge(group, rep, pos)));
    if (facet < 0) throw DomainError("facet of a circular cell is not a cell");
    return facet;
  };
  for (int i = 0; i < out.poset.size(); ++i) {
    const int k = out.poset.ranks[static_cast<std::size_t>(i)];
    for (int pos = 0; pos <= k && k >= 1; ++pos) {
      int facet = facet_of(out.poset.elements[static_cast<std::size_t>(i)], pos);
      out.summary.faces.push_back({i, facet, pos});
    }
  }

  // well-definedness: the facet of q(x) is q(merge(x, pos)) for every
  // representative x, not just the canonical one
  for (int i = 0; i < linear.size(); ++i) {
    const int k = linear.ranks[static_cast<std::size_t>(i)];
    if (k < 1) continue;
    int ci = out.identification[static_cast<std::size_t>(i)];
    for (int pos = 0; pos <= k; ++pos) {
      int via_rep = out.poset.index_of(
          circularize(group, merge(group, linear.elements[static_cast<std::size_t>(i)], pos)));
      int via_class = facet_of(out.poset.elements[static_cast<std::size_t>(ci)], pos);
      if (via_rep != via_class) {
        throw DomainError("face identification is not well-defined");
      }
    }
  }

  out.summary.euler = detail::alternating_sum(out.summary.dims);
  out.summary.skeleton_components = detail::skeleton_components(
      out.summary.cell_dims, out.summary.faces,
      out.poset.rank_counts.empty() ? 0 : static_cast<int>(out.poset.rank_counts.size()) - 1);
  return out;
}

}  // namespace ncfact
