#pragma once

#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace ncfact {

/// Element is outside the monoid generated by the marked generating set,
/// or an input fails a structural requirement (crossing partition, bad chain, ...).
class DomainError : public std::runtime_error {
 public:
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

/// A comparison precondition (h <= g in the absolute order) does not hold.
class OrderError : public std::runtime_error {
 public:
  explicit OrderError(const std::string& what) : std::runtime_error(what) {}
};

/// Invalid merge position or a merge that would leave fewer than two entries.
class MergeError : public std::runtime_error {
 public:
  explicit MergeError(const std::string& what) : std::runtime_error(what) {}
};

/// An enumeration exceeded the configured size guard.
class ResourceError : public std::runtime_error {
 public:
  explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

/// Distance queried for points that do not share a closed simplex.
class MetricScopeError : public std::runtime_error {
 public:
  explicit MetricScopeError(const std::string& what) : std::runtime_error(what) {}
};

/// Cap on enumeration sizes. Every enumerating operation takes one; the
/// default of 10^6 elements keeps desk-scale runs well under a second of
/// allocation churn while still admitting Sym_6 intervals.
struct SizeGuard {
  std::uint64_t limit = 1000000;

  void check(std::uint64_t count, const char* where) const {
    if (count > limit) {
      throw ResourceError(std::string(where) + ": enumeration exceeds size guard (" +
                          std::to_string(limit) + ")");
    }
  }
};

/// Reads NCFACT_SIZE_GUARD from the environment, falling back to the default.
inline SizeGuard size_guard_from_env() {
  SizeGuard guard;
  if (const char* env = std::getenv("NCFACT_SIZE_GUARD")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v > 0) guard.limit = v;
  }
  return guard;
}

}  // namespace ncfact
