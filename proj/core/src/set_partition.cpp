#include "ncfact/set_partition.hpp"

#include <algorithm>
#include <sstream>

#include "ncfact/errors.hpp"

namespace ncfact {

SetPartition::SetPartition(int ground_size) : SetPartition(ground_size, {}) {}

SetPartition::SetPartition(int ground_size, std::vector<std::vector<int>> blocks)
    : ground_(ground_size) {
  if (ground_size < 0) throw DomainError("negative ground size");
  block_of_.assign(static_cast<std::size_t>(ground_size), -1);
  for (auto& block : blocks) {
    if (block.empty()) throw DomainError("empty block");
    std::sort(block.begin(), block.end());
    for (int p : block) {
      if (p < 1 || p > ground_size) throw DomainError("block point out of range");
      if (block_of_[static_cast<std::size_t>(p - 1)] >= 0) throw DomainError("blocks overlap");
      block_of_[static_cast<std::size_t>(p - 1)] = 0;  // provisional
    }
    blocks_.push_back(std::move(block));
  }
  for (int p = 1; p <= ground_size; ++p) {
    if (block_of_[static_cast<std::size_t>(p - 1)] < 0) blocks_.push_back({p});
  }
  std::sort(blocks_.begin(), blocks_.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    for (int p : blocks_[i]) block_of_[static_cast<std::size_t>(p - 1)] = static_cast<int>(i);
  }
}

std::vector<std::vector<int>> SetPartition::nontrivial_blocks() const {
  std::vector<std::vector<int>> out;
  for (const auto& block : blocks_) {
    if (block.size() > 1) out.push_back(block);
  }
  return out;
}

bool SetPartition::is_all_singletons() const {
  return static_cast<int>(blocks_.size()) == ground_;
}

bool SetPartition::refines(const SetPartition& coarser) const {
  if (ground_ != coarser.ground_) return false;
  for (const auto& block : blocks_) {
    for (std::size_t i = 1; i < block.size(); ++i) {
      if (!coarser.same_block(block[0], block[i])) return false;
    }
  }
  return true;
}

std::string SetPartition::to_string() const {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    if (i) os << ',';
    os << '{';
    for (std::size_t j = 0; j < blocks_[i].size(); ++j) {
      if (j) os << ',';
      os << blocks_[i][j];
    }
    os << '}';
  }
  os << '}';
  return os.str();
}

bool is_noncrossing(const SetPartition& partition) {
  const auto& blocks = partition.blocks();
  // Two blocks cross iff their circular membership word has more than two
  // maximal runs.
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    if (blocks[i].size() < 2) continue;
    for (std::size_t j = i + 1; j < blocks.size(); ++j) {
      if (blocks[j].size() < 2) continue;
      std::vector<char> word;  // membership along the merged sorted points
      std::size_t a = 0, b = 0;
      while (a < blocks[i].size() || b < blocks[j].size()) {
        if (b == blocks[j].size() || (a < blocks[i].size() && blocks[i][a] < blocks[j][b])) {
          word.push_back('A');
          ++a;
        } else {
          word.push_back('B');
          ++b;
        }
      }
      int runs = 0;
      for (std::size_t k = 0; k < word.size(); ++k) {
        if (k == 0 || word[k] != word[k - 1]) ++runs;
      }
      if (word.front() == word.back() && runs > 1) --runs;  // circular wrap
      if (runs > 2) return false;
    }
  }
  return true;
}

SetPartition shuffle(const std::vector<SetPartition>& parts) {
  if (parts.empty()) throw DomainError("shuffle of an empty tuple");
  const int d = parts[0].ground_size();
  const int k = static_cast<int>(parts.size());
  for (const auto& p : parts) {
    if (p.ground_size() != d) throw DomainError("shuffle components have mixed ground sizes");
  }
  std::vector<std::vector<int>> blocks;
  for (int j = 1; j <= k; ++j) {
    for (const auto& block : parts[static_cast<std::size_t>(j - 1)].blocks()) {
      std::vector<int> image;
      image.reserve(block.size());
      for (int m : block) image.push_back((m - 1) * k + j);
      blocks.push_back(std::move(image));
    }
  }
  return SetPartition(d * k, std::move(blocks));
}

std::vector<SetPartition> unshuffle(const SetPartition& partition, int k) {
  if (k < 1) throw DomainError("unshuffle needs k >= 1");
  if (partition.ground_size() % k != 0) throw DomainError("ground size is not a multiple of k");
  const int d = partition.ground_size() / k;
  std::vector<std::vector<std::vector<int>>> blocks(static_cast<std::size_t>(k));
  for (const auto& block : partition.blocks()) {
    const int j = (block.front() - 1) % k;
    std::vector<int> preimage;
    preimage.reserve(block.size());
    for (int x : block) {
      if ((x - 1) % k != j) throw DomainError("not a shuffle partition: block mixes residues mod k");
      preimage.push_back((x - 1 - j) / k + 1);
    }
    blocks[static_cast<std::size_t>(j)].push_back(std::move(preimage));
  }
  std::vector<SetPartition> out;
  out.reserve(static_cast<std::size_t>(k));
  for (int j = 0; j < k; ++j) out.emplace_back(d, std::move(blocks[static_cast<std::size_t>(j)]));
  return out;
}

}  // namespace ncfact
