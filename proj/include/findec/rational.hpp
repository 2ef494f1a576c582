#pragma once

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace findec {

/// Exact rational coefficients. All symbolic computations use these; floating
/// point only enters through the analytic module.
using Rational = mpq_class;

struct Error : std::runtime_error {
  Error(std::string kind_, const std::string& what_)
      : std::runtime_error(kind_ + ": " + what_), kind(std::move(kind_)) {}
  std::string kind;
};

inline std::string rat_str(const Rational& q) { return q.get_str(); }

/// Parses "3", "-3" or "3/2". Rejects zero denominators and stray characters.
inline Rational parse_rational(const std::string& s) {
  std::size_t i = 0;
  if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
  std::size_t digits = 0;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i, ++digits;
  if (digits == 0) throw Error("ParseError", "bad rational '" + s + "'");
  if (i < s.size()) {
    if (s[i] != '/') throw Error("ParseError", "bad rational '" + s + "'");
    ++i;
    std::size_t den = 0;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i, ++den;
    if (den == 0 || i != s.size()) throw Error("ParseError", "bad rational '" + s + "'");
  }
  Rational q(s);
  if (q.get_den() == 0) throw Error("ParseError", "zero denominator in '" + s + "'");
  q.canonicalize();
  return q;
}

}  // namespace findec
