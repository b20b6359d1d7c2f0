#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

namespace ncfact {

/// Permutation of {1,...,d} stored in one-line notation (0-based internally).
///
/// Products compose right-to-left: (p * q)(i) = p(q(i)), i.e. the right
/// factor acts first. With a = (1 2), b = (2 3), c = (1 3) this gives
/// a*b = b*c = c*a = (1 2 3), the orientation every factorization in this
/// library relies on.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(int degree);  // identity

  static Permutation identity(int degree);
  /// one_line[i] is the image of i+1, values in {1,...,d}.
  static Permutation from_one_line(const std::vector<int>& one_line);
  /// Cycles use 1-based points; unmentioned points are fixed.
  static Permutation from_cycles(int degree, const std::vector<std::vector<int>>& cycles);
  static Permutation transposition(int degree, int i, int j);  // 1-based

  int degree() const { return static_cast<int>(img_.size()); }
  bool is_identity() const;

  /// Image of a 0-based point.
  int apply(int i) const { return img_[static_cast<std::size_t>(i)]; }
  /// Image of a 1-based point.
  int image_of(int i) const { return img_[static_cast<std::size_t>(i - 1)] + 1; }

  Permutation operator*(const Permutation& rhs) const;
  Permutation inverse() const;

  /// Number of cycles, counting fixed points.
  int cycle_count() const;
  /// Disjoint cycles as 1-based point lists, each rotated to start at its
  /// minimum, sorted by minimum. Fixed points included only on request.
  std::vector<std::vector<int>> cycles(bool include_fixed_points = false) const;

  /// Canonical text form: "(1 2 3)", "(1 2)(3 4)", identity "()" with fixed
  /// points omitted.
  std::string to_cycle_string() const;

  const std::vector<int>& one_line_zero_based() const { return img_; }
  std::vector<int> one_line() const;  // 1-based

  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<int> img_;
};

/// The standard d-cycle (1 2 ... d).
Permutation delta(int degree);

/// Parses the canonical cycle text form, e.g. "(1 2)(3 4)" or "()".
Permutation parse_cycles(int degree, const std::string& text);

}  // namespace ncfact
