#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace cmspets {

using Integer = mpz_class;
using Rational = mpq_class;

/// Raised when an exact division does not go through.
struct DivisibilityError : std::domain_error {
  using std::domain_error::domain_error;
};

/// Raised when operands disagree on shape (variable sets, lengths, conductors).
struct ShapeError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Raised when an argument lies outside an operation's domain.
struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};

inline Rational make_rational(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline std::string to_string(const Integer& z) { return z.get_str(); }

/// "p/q", or "p" when the denominator is 1.
inline std::string to_string(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

inline Rational parse_rational(std::string_view text) {
  std::string s(text);
  Rational r;
  if (s.empty() || r.set_str(s, 10) != 0) {
    throw std::invalid_argument("not a rational number: '" + s + "'");
  }
  if (r.get_den() == 0) throw std::invalid_argument("zero denominator: '" + s + "'");
  r.canonicalize();
  return r;
}

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }

}  // namespace cmspets
