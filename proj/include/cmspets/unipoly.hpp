#pragma once

#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "cmspets/cyclotomic.hpp"

namespace cmspets {

/// Dense univariate polynomial, lowest degree first, no trailing zeros.
template <class T>
class UniPoly {
 public:
  UniPoly() = default;
  UniPoly(const T& constant) : coeffs_{constant} { trim(); }  // NOLINT
  explicit UniPoly(std::vector<T> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  static UniPoly monomial(const T& c, int degree) {
    std::vector<T> v(degree + 1, T(0));
    v[degree] = c;
    return UniPoly(std::move(v));
  }
  /// q - root
  static UniPoly linear(const T& root) { return UniPoly(std::vector<T>{-root, T(1)}); }

  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  int valuation() const {
    for (size_t i = 0; i < coeffs_.size(); ++i) {
      if (!cmspets::is_zero(coeffs_[i])) return static_cast<int>(i);
    }
    return -1;
  }
  const std::vector<T>& coeffs() const { return coeffs_; }
  T coeff(int i) const {
    return i >= 0 && i < static_cast<int>(coeffs_.size()) ? coeffs_[i] : T(0);
  }
  const T& leading() const { return coeffs_.back(); }

  UniPoly& operator+=(const UniPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), T(0));
    for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
  }
  UniPoly& operator-=(const UniPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), T(0));
    for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
  }
  UniPoly operator-() const {
    UniPoly r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
  }
  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return UniPoly();
    std::vector<T> r(a.coeffs_.size() + b.coeffs_.size() - 1, T(0));
    for (size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (cmspets::is_zero(a.coeffs_[i])) continue;
      for (size_t j = 0; j < b.coeffs_.size(); ++j) r[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return UniPoly(std::move(r));
  }
  UniPoly& operator*=(const UniPoly& o) { return *this = *this * o; }
  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.coeffs_ == b.coeffs_; }

  /// Quotient and remainder; the divisor's leading coefficient must be invertible.
  std::pair<UniPoly, UniPoly> divmod(const UniPoly& divisor) const {
    if (divisor.is_zero()) throw DivisibilityError("polynomial division by zero");
    std::vector<T> rem = coeffs_;
    const int dd = divisor.degree();
    if (degree() < dd) return {UniPoly(), *this};
    std::vector<T> quot(degree() - dd + 1, T(0));
    const T lead_inv = T(1) / divisor.leading();
    for (int i = degree(); i >= dd; --i) {
      if (cmspets::is_zero(rem[i])) continue;
      T c = rem[i] * lead_inv;
      quot[i - dd] = c;
      for (int j = 0; j <= dd; ++j) rem[i - dd + j] -= c * divisor.coeffs_[j];
    }
    return {UniPoly(std::move(quot)), UniPoly(std::move(rem))};
  }

  /// Exact quotient; throws DivisibilityError on a nonzero remainder.
  UniPoly divexact(const UniPoly& divisor) const {
    auto [q, r] = divmod(divisor);
    if (!r.is_zero()) throw DivisibilityError("inexact polynomial division");
    return q;
  }

  template <class U>
  U evaluate(const U& x) const {
    U acc(0);
    for (int i = degree(); i >= 0; --i) acc = acc * x + U(coeffs_[i]);
    return acc;
  }

  UniPoly derivative() const {
    if (coeffs_.size() <= 1) return UniPoly();
    std::vector<T> r(coeffs_.size() - 1, T(0));
    for (size_t i = 1; i < coeffs_.size(); ++i) r[i - 1] = coeffs_[i] * T(static_cast<long>(i));
    return UniPoly(std::move(r));
  }

  /// p(q + shift)
  UniPoly shifted(const T& shift) const {
    UniPoly result;
    const UniPoly x(std::vector<T>{shift, T(1)});
    for (int i = degree(); i >= 0; --i) result = result * x + UniPoly(coeffs_[i]);
    return result;
  }

  /// Descending powers, e.g. "q^2 + q" or "(1 + z3)*q - 2".
  std::string str(const std::string& var = "q") const;

 private:
  void trim() {
    while (!coeffs_.empty() && cmspets::is_zero(coeffs_.back())) coeffs_.pop_back();
  }
  std::vector<T> coeffs_;
};

using RatPoly = UniPoly<Rational>;
using CycPoly = UniPoly<Cyclotomic>;

namespace detail {
inline std::string coeff_text(const Rational& c) { return to_string(c); }
inline std::string coeff_text(const Cyclotomic& c) { return c.str(); }
inline bool single_term(const Rational&) { return true; }
inline bool single_term(const Cyclotomic& c) {
  int n = 0;
  for (const auto& x : c.coeffs()) n += sgn(x) != 0;
  return n <= 1;
}
inline int sign_of(const Rational& c) { return sgn(c); }
inline int sign_of(const Cyclotomic& c) {
  if (!single_term(c)) return 1;
  for (const auto& x : c.coeffs()) {
    if (sgn(x) != 0) return sgn(x);
  }
  return 0;
}
}  // namespace detail

template <class T>
std::string UniPoly<T>::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const T& c = coeffs_[i];
    if (cmspets::is_zero(c)) continue;
    const int s = detail::sign_of(c);
    const T mag = s < 0 ? T(-c) : c;
    if (first) {
      if (s < 0) out << "-";
    } else {
      out << (s < 0 ? " - " : " + ");
    }
    first = false;
    const std::string mono = i == 0 ? "" : (i == 1 ? var : var + "^" + std::to_string(i));
    const bool unit = mag == T(1);
    if (i == 0) {
      out << detail::coeff_text(mag);
    } else if (unit) {
      out << mono;
    } else if (detail::single_term(mag)) {
      out << detail::coeff_text(mag) << "*" << mono;
    } else {
      out << "(" << detail::coeff_text(mag) << ")*" << mono;
    }
  }
  return out.str();
}

/// Phi_e over the rationals.
RatPoly cyclotomic_polynomial(int e);

/// Lifts rational coefficients into the cyclotomic field.
CycPoly to_cyclotomic(const RatPoly& p);

/// Largest m with (q - root)^m dividing p. Throws DomainError for p = 0.
int root_multiplicity(const CycPoly& p, const Cyclotomic& root);
int root_multiplicity(const RatPoly& p, const Cyclotomic& root);

/// Largest m with Phi_e^m dividing p over Q.
int cyclotomic_valuation(const RatPoly& p, int e);

/// Monic gcd over Q.
RatPoly gcd(RatPoly a, RatPoly b);

}  // namespace cmspets
