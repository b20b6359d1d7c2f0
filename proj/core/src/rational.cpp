#include "ncfact/rational.hpp"

#include "ncfact/errors.hpp"

namespace ncfact {

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw DomainError("empty rational literal");
  auto slash = text.find('/');
  try {
    if (slash != std::string::npos) {
      Integer num(text.substr(0, slash));
      Integer den(text.substr(slash + 1));
      if (den == 0) throw DomainError("rational with zero denominator: " + text);
      return Rational(num, den);
    }
    auto dot = text.find('.');
    if (dot != std::string::npos) {
      std::string digits = text.substr(0, dot) + text.substr(dot + 1);
      Integer num(digits);
      Integer den = 1;
      for (std::size_t i = dot + 1; i < text.size(); ++i) den *= 10;
      return Rational(num, den);
    }
    return Rational(Integer(text));
  } catch (const std::runtime_error& e) {
    throw DomainError("bad rational literal '" + text + "': " + e.what());
  }
}

std::string rational_to_string(const Rational& r) {
  return numerator(r).str() + "/" + denominator(r).str();
}

double rational_to_double(const Rational& r) { return r.convert_to<double>(); }

}  // namespace ncfact
