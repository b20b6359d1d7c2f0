#include "ncfact/biane.hpp"

#include "ncfact/errors.hpp"

namespace ncfact {

SetPartition biane_psi(const Permutation& p) {
  return SetPartition(p.degree(), p.cycles(true));
}

Permutation biane_psi_inv(const SetPartition& partition, int degree) {
  if (partition.ground_size() != degree) throw DomainError("ground size does not match degree");
  if (!is_noncrossing(partition)) {
    throw DomainError("biane_psi_inv is only defined for noncrossing partitions");
  }
  std::vector<std::vector<int>> cycles;
  for (const auto& block : partition.blocks()) {
    if (block.size() > 1) cycles.push_back(block);  // blocks are stored sorted
  }
  return Permutation::from_cycles(degree, cycles);
}

}  // namespace ncfact
