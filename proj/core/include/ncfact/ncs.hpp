#pragma once

#include <random>
#include <string>
#include <utility>
#include <vector>

#include "ncfact/biane.hpp"
#include "ncfact/rational.hpp"
#include "ncfact/set_partition.hpp"
#include "ncfact/top_poset.hpp"

namespace ncfact {

/// A degree-d noncrossing partition of the circle: finitely many base points
/// with a partition of the d preimage sheets at each. Base point 0 is always
/// stored; other positions carry at least one non-singleton block.
///
/// The d preimages of e^{2 pi i s} under z -> z^d are numbered 1..d in
/// increasing argument starting from 2 pi s / d, so sheet m of base point s
/// sits at circle position (m - 1 + s) / d.
struct NCSPartition {
  int d = 0;
  std::vector<std::pair<Rational, SetPartition>> support;  // sorted by position

  bool operator==(const NCSPartition&) const = default;
};

/// Canonicalizes and checks structural invariants (noncrossing validity is
/// separate; see validate_ncs).
NCSPartition make_ncs_partition(int d, std::vector<std::pair<Rational, SetPartition>> support);

/// Noncrossing condition: the shuffle of the per-position partitions, read in
/// position order, is noncrossing.
bool validate_ncs(const NCSPartition& p);

/// Independent brute-force check on the lifted point set: every pair of
/// blocks, compared as chords of actual circle positions.
bool validate_ncs_by_lifting(const NCSPartition& p);

/// Sum of (|block| - 1) over all non-singleton blocks; the rank function.
long total_criticality(const NCSPartition& p);

/// Armstrong's equivalence, both sides: the shuffle of the orbit partitions
/// is noncrossing vs. the lengths add along the product.
std::pair<bool, bool> armstrong_check(const SymmetricGroup& sym,
                                      const std::vector<Permutation>& xs);

/// Planar dual of a partition drawn in the disk: one black vertex per hull,
/// one white vertex per complementary region, edges along shared hull sides.
struct DualTree {
  long long black_count = 0;  // non-singleton blocks
  long long white_count = 0;  // complementary regions
  std::vector<std::pair<long long, long long>> edges;  // (black, white)
  bool is_tree = false;
};

struct RegionReport {
  long long count = 0;  // complementary regions, by direct face tracing
  DualTree tree;
};

RegionReport complementary_regions(const NCSPartition& p);

/// Maximal iff the criticality reaches d-1, equivalently d regions.
bool is_maximal(const NCSPartition& p);

/// Refinement over the union of supports, positionwise (absent = singletons).
bool refinement_leq(const NCSPartition& fine, const NCSPartition& coarse);

/// The positionwise orbit-partition map from circular classes over
/// (Sym_d, delta) to degree-d noncrossing partitions, and its inverse.
NCSPartition psi_big(const SymmetricGroup& sym, const CircClass<Permutation>& u);
CircClass<Permutation> psi_big_inv(const SymmetricGroup& sym, const NCSPartition& p);

/// Seeded generator of valid partitions: a random circular class pushed
/// through psi_big. Doubles as a stress test for the isomorphism.
NCSPartition random_ncs_partition(const SymmetricGroup& sym, std::mt19937_64& rng);

std::string ncs_to_string(const NCSPartition& p);

}  // namespace ncfact
