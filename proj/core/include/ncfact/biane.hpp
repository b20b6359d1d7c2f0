#pragma once

#include "ncfact/permutation.hpp"
#include "ncfact/set_partition.hpp"

namespace ncfact {

/// Orbit partition of a permutation: each cycle becomes a block. Restricted
/// to [1, delta_d] this is an isomorphism onto the noncrossing partitions of
/// {1,...,d}, refinement order matching absolute order.
SetPartition biane_psi(const Permutation& p);

/// Inverse map: each block, read in increasing order, becomes a cycle.
/// Defined only for noncrossing partitions; throws DomainError otherwise.
Permutation biane_psi_inv(const SetPartition& partition, int degree);

}  // namespace ncfact
