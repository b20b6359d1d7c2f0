#pragma once

#include <string>
#include <vector>

namespace ncfact {

/// Partition of {1,...,m} into disjoint nonempty blocks. Canonical form keeps
/// every block sorted and blocks ordered by their minima; singletons are
/// stored.
class SetPartition {
 public:
  SetPartition() = default;
  /// All-singleton partition.
  explicit SetPartition(int ground_size);
  /// Blocks may omit singletons; they are filled in. Throws DomainError on
  /// overlap or out-of-range points.
  SetPartition(int ground_size, std::vector<std::vector<int>> blocks);

  int ground_size() const { return ground_; }
  const std::vector<std::vector<int>>& blocks() const { return blocks_; }
  std::vector<std::vector<int>> nontrivial_blocks() const;
  bool is_all_singletons() const;

  /// Index of the block containing a 1-based point.
  int block_of(int point) const { return block_of_[static_cast<std::size_t>(point - 1)]; }
  bool same_block(int a, int b) const { return block_of(a) == block_of(b); }

  /// Every block of *this contained in a block of coarser.
  bool refines(const SetPartition& coarser) const;

  /// "{{1,2},{3}}"
  std::string to_string() const;

  bool operator==(const SetPartition& rhs) const {
    return ground_ == rhs.ground_ && blocks_ == rhs.blocks_;
  }
  bool operator<(const SetPartition& rhs) const {
    return blocks_ != rhs.blocks_ ? blocks_ < rhs.blocks_ : ground_ < rhs.ground_;
  }

 private:
  int ground_ = 0;
  std::vector<std::vector<int>> blocks_;
  std::vector<int> block_of_;
};

/// Noncrossing for points placed at the m-th roots of unity in index order:
/// no two blocks interleave around the circle.
bool is_noncrossing(const SetPartition& partition);

/// Interleaves k partitions of {1,...,d} into one partition of {1,...,dk} by
/// sending point m of the j-th partition (1-based) to (m-1)k + j.
SetPartition shuffle(const std::vector<SetPartition>& parts);

/// Splits a k-shuffle partition back into its k components. Throws
/// DomainError if some block mixes residues mod k.
std::vector<SetPartition> unshuffle(const SetPartition& partition, int k);

}  // namespace ncfact
