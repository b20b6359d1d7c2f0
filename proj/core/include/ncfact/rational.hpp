#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace ncfact {

/// Exact rational positions. Position equality is semantic everywhere in the
/// data model, so floating point is banned; doubles appear only in emitted
/// distances and rendered coordinates.
using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

/// Parses "p/q", "p", or a plain decimal like "0.4" into an exact rational.
Rational parse_rational(const std::string& text);

/// Canonical "p/q" form, reduced, q >= 1 ("0/1", "1/2", "7/3").
std::string rational_to_string(const Rational& r);

double rational_to_double(const Rational& r);

/// Midpoint, used as the canonical "fresh position strictly between a and b".
inline Rational fresh_between(const Rational& a, const Rational& b) {
  return (a + b) / 2;
}

}  // namespace ncfact
