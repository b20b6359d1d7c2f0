#include "ncfact/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "ncfact/errors.hpp"

namespace ncfact {

Permutation::Permutation(int degree) : img_(static_cast<std::size_t>(degree)) {
  if (degree < 1) throw DomainError("permutation degree must be positive");
  std::iota(img_.begin(), img_.end(), 0);
}

Permutation Permutation::identity(int degree) { return Permutation(degree); }

Permutation Permutation::from_one_line(const std::vector<int>& one_line) {
  Permutation p(static_cast<int>(one_line.size()));
  std::vector<bool> seen(one_line.size(), false);
  for (std::size_t i = 0; i < one_line.size(); ++i) {
    int v = one_line[i];
    if (v < 1 || v > static_cast<int>(one_line.size()) || seen[static_cast<std::size_t>(v - 1)]) {
      throw DomainError("one-line notation is not a bijection");
    }
    seen[static_cast<std::size_t>(v - 1)] = true;
    p.img_[i] = v - 1;
  }
  return p;
}

Permutation Permutation::from_cycles(int degree, const std::vector<std::vector<int>>& cycles) {
  Permutation p(degree);
  std::vector<bool> seen(static_cast<std::size_t>(degree), false);
  for (const auto& cycle : cycles) {
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      int from = cycle[i];
      int to = cycle[(i + 1) % cycle.size()];
      if (from < 1 || from > degree) throw DomainError("cycle point out of range");
      if (seen[static_cast<std::size_t>(from - 1)]) throw DomainError("cycles are not disjoint");
      seen[static_cast<std::size_t>(from - 1)] = true;
      p.img_[static_cast<std::size_t>(from - 1)] = to - 1;
    }
  }
  return p;
}

Permutation Permutation::transposition(int degree, int i, int j) {
  if (i == j) throw DomainError("transposition needs two distinct points");
  return from_cycles(degree, {{i, j}});
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < img_.size(); ++i) {
    if (img_[i] != static_cast<int>(i)) return false;
  }
  return true;
}

Permutation Permutation::operator*(const Permutation& rhs) const {
  if (degree() != rhs.degree()) throw DomainError("degree mismatch in permutation product");
  Permutation out(degree());
  for (std::size_t i = 0; i < img_.size(); ++i) {
    out.img_[i] = img_[static_cast<std::size_t>(rhs.img_[i])];
  }
  return out;
}

Permutation Permutation::inverse() const {
  Permutation out(degree());
  for (std::size_t i = 0; i < img_.size(); ++i) {
    out.img_[static_cast<std::size_t>(img_[i])] = static_cast<int>(i);
  }
  return out;
}

int Permutation::cycle_count() const {
  int count = 0;
  std::vector<bool> seen(img_.size(), false);
  for (std::size_t i = 0; i < img_.size(); ++i) {
    if (seen[i]) continue;
    ++count;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(img_[j])) seen[j] = true;
  }
  return count;
}

std::vector<std::vector<int>> Permutation::cycles(bool include_fixed_points) const {
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(img_.size(), false);
  for (std::size_t i = 0; i < img_.size(); ++i) {
    if (seen[i]) continue;
    std::vector<int> cycle;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(img_[j])) {
      seen[j] = true;
      cycle.push_back(static_cast<int>(j) + 1);
    }
    if (cycle.size() > 1 || include_fixed_points) out.push_back(std::move(cycle));
  }
  return out;
}

std::string Permutation::to_cycle_string() const {
  auto cs = cycles(false);
  if (cs.empty()) return "()";
  std::ostringstream os;
  for (const auto& cycle : cs) {
    os << '(';
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      if (i) os << ' ';
      os << cycle[i];
    }
    os << ')';
  }
  return os.str();
}

std::vector<int> Permutation::one_line() const {
  std::vector<int> out(img_.size());
  for (std::size_t i = 0; i < img_.size(); ++i) out[i] = img_[i] + 1;
  return out;
}

Permutation delta(int degree) {
  std::vector<int> cycle(static_cast<std::size_t>(degree));
  std::iota(cycle.begin(), cycle.end(), 1);
  return Permutation::from_cycles(degree, {cycle});
}

Permutation parse_cycles(int degree, const std::string& text) {
  std::vector<std::vector<int>> cycles;
  std::size_t i = 0;
  auto skip_space = [&] {
    while (i < text.size() && text[i] == ' ') ++i;
  };
  skip_space();
  while (i < text.size()) {
    if (text[i] != '(') throw DomainError("expected '(' in cycle string: " + text);
    ++i;
    std::vector<int> cycle;
    skip_space();
    while (i < text.size() && text[i] != ')') {
      std::size_t end = i;
      while (end < text.size() && text[end] >= '0' && text[end] <= '9') ++end;
      if (end == i) throw DomainError("expected digit in cycle string: " + text);
      cycle.push_back(std::stoi(text.substr(i, end - i)));
      i = end;
      skip_space();
    }
    if (i == text.size()) throw DomainError("unterminated cycle in: " + text);
    ++i;  // ')'
    if (!cycle.empty()) cycles.push_back(std::move(cycle));
    skip_space();
  }
  return Permutation::from_cycles(degree, cycles);
}

}  // namespace ncfact
