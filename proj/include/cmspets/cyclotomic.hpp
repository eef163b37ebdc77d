#pragma once

#include <string>
#include <vector>

#include "cmspets/rational.hpp"

namespace cmspets {

/// Euler's totient.
int euler_phi(int n);

/// Integer coefficients of the n-th cyclotomic polynomial, lowest degree first.
const std::vector<Integer>& cyclotomic_coefficients(int n);

/// An element of Q(zeta_N), stored reduced modulo Phi_N in the power basis
/// {1, z, ..., z^(phi(N)-1)} where z = exp(2*pi*i/N).
///
/// Binary operations on operands of different conductors lift both to the
/// lcm first. The conductor is never lowered implicitly; `normalized()` finds
/// the smallest field containing the value.
class Cyclotomic {
 public:
  Cyclotomic() : conductor_(1), coeffs_(1) {}
  Cyclotomic(const Rational& r) : conductor_(1), coeffs_{r} {}  // NOLINT
  Cyclotomic(long v) : conductor_(1), coeffs_{Rational(v)} {}    // NOLINT
  Cyclotomic(int v) : Cyclotomic(static_cast<long>(v)) {}        // NOLINT

  /// Builds from an arbitrary-length coefficient vector in powers of zeta_N.
  static Cyclotomic from_powers(int conductor, const std::vector<Rational>& powers);
  /// zeta_N^power.
  static Cyclotomic zeta(int conductor, long power = 1);

  int conductor() const { return conductor_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  bool is_zero() const;
  bool is_rational() const;
  Rational to_rational() const;

  Cyclotomic lifted(int conductor) const;
  Cyclotomic normalized() const;
  Cyclotomic conj() const;
  Cyclotomic inverse() const;
  /// Image under zeta_N -> zeta_N^t, gcd(t, N) = 1.
  Cyclotomic galois(int t) const;

  Cyclotomic& operator+=(const Cyclotomic& o);
  Cyclotomic& operator-=(const Cyclotomic& o);
  Cyclotomic& operator*=(const Cyclotomic& o);
  Cyclotomic& operator/=(const Cyclotomic& o);
  Cyclotomic operator-() const;

  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
  friend Cyclotomic operator/(Cyclotomic a, const Cyclotomic& b) { return a /= b; }
  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);

  /// "c0 + c1*z12 + c2*z12^2", zero terms omitted; rationals print bare.
  std::string str() const;

 private:
  Cyclotomic(int conductor, std::vector<Rational> coeffs)
      : conductor_(conductor), coeffs_(std::move(coeffs)) {}

  int conductor_;
  std::vector<Rational> coeffs_;
};

inline bool is_zero(const Cyclotomic& c) { return c.is_zero(); }

/// Square root of -3 as 2*zeta_3 + 1.
Cyclotomic sqrt_minus_3();

}  // namespace cmspets
