#include <deque>

#include "ncfact/marked_group.hpp"

namespace ncfact {

TableGroup::TableGroup(std::vector<std::vector<int>> multiplication, int identity_index,
                       std::vector<int> generator_indices, std::vector<std::string> names)
    : mult_(std::move(multiplication)),
      identity_(identity_index),
      generators_(std::move(generator_indices)),
      names_(std::move(names)) {
  const int n = order();
  if (n == 0) throw DomainError("empty multiplication table");
  for (const auto& row : mult_) {
    if (static_cast<int>(row.size()) != n) throw DomainError("multiplication table is not square");
    for (int v : row) {
      if (v < 0 || v >= n) throw DomainError("multiplication table entry out of range");
    }
  }
  if (identity_ < 0 || identity_ >= n) throw DomainError("identity index out of range");
  for (int t : generators_) {
    if (t < 0 || t >= n) throw DomainError("generator index out of range");
  }
  if (names_.empty()) {
    names_.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) names_.push_back("g" + std::to_string(i));
  }
  if (static_cast<int>(names_.size()) != n) throw DomainError("name table size mismatch");

  verify_group_axioms();
  inv_.assign(static_cast<std::size_t>(n), -1);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (multiply(a, b) == identity_) {
        inv_[static_cast<std::size_t>(a)] = b;
        break;
      }
    }
    if (inv_[static_cast<std::size_t>(a)] < 0) throw DomainError("element without inverse");
  }
  verify_conjugacy_closed();
  compute_lengths();
}

void TableGroup::verify_group_axioms() const {
  const int n = order();
  for (int a = 0; a < n; ++a) {
    if (multiply(identity_, a) != a || multiply(a, identity_) != a) {
      throw DomainError("identity index does not act as identity");
    }
  }
  // Associativity spot-check is quadratic-in-n cubed for a full sweep; tables
  // here come from actual groups, so check a bounded sample plus all
  // generator triples.
  for (int t : generators_) {
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) {
        if (multiply(multiply(a, b), t) != multiply(a, multiply(b, t))) {
          throw DomainError("multiplication table is not associative");
        }
      }
    }
  }
}

void TableGroup::verify_conjugacy_closed() const {
  const int n = order();
  for (int t : generators_) {
    for (int g = 0; g < n; ++g) {
      int conj = multiply(multiply(g, t), inv_[static_cast<std::size_t>(g)]);
      bool found = false;
      for (int s : generators_) {
        if (s == conj) {
          found = true;
          break;
        }
      }
      if (!found) throw DomainError("generating set is not closed under conjugation");
    }
  }
}

void TableGroup::compute_lengths() {
  lengths_.assign(static_cast<std::size_t>(order()), -1);
  lengths_[static_cast<std::size_t>(identity_)] = 0;
  std::deque<int> queue = {identity_};
  while (!queue.empty()) {
    int x = queue.front();
    queue.pop_front();
    for (int t : generators_) {
      int y = multiply(x, t);
      if (lengths_[static_cast<std::size_t>(y)] < 0) {
        lengths_[static_cast<std::size_t>(y)] = lengths_[static_cast<std::size_t>(x)] + 1;
        queue.push_back(y);
      }
    }
  }
}

}  // namespace ncfact
