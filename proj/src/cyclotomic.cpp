#include "cmspets/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <optional>
#include <sstream>

namespace cmspets {

int euler_phi(int n) {
  if (n < 1) throw DomainError("euler_phi: n must be positive");
  int result = n;
  int m = n;
  for (int p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      while (m % p == 0) m /= p;
      result -= result / p;
    }
  }
  if (m > 1) result -= result / m;
  return result;
}

namespace {

std::vector<Integer> compute_cyclotomic(int n) {
  // x^n - 1 divided by Phi_d for every proper divisor d of n.
  std::vector<Integer> num(n + 1, 0);
  num[0] = -1;
  num[n] = 1;
  for (int d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    const auto& den = cyclotomic_coefficients(d);
    const int dd = static_cast<int>(den.size()) - 1;
    const int nd = static_cast<int>(num.size()) - 1;
    std::vector<Integer> quot(nd - dd + 1, 0);
    for (int i = nd; i >= dd; --i) {
      Integer c = num[i];
      quot[i - dd] = c;
      if (c == 0) continue;
      for (int j = 0; j <= dd; ++j) num[i - dd + j] -= c * den[j];
    }
    quot.swap(num);
  }
  return num;
}

// Rational Gaussian elimination: solves cols * a = rhs when a solution exists.
std::optional<std::vector<Rational>> solve_rational(std::vector<std::vector<Rational>> rows,
                                                    std::vector<Rational> rhs) {
  const size_t m = rows.size();
  const size_t n = m == 0 ? 0 : rows[0].size();
  std::vector<int> pivot_col;
  size_t r = 0;
  for (size_t c = 0; c < n && r < m; ++c) {
    size_t p = r;
    while (p < m && sgn(rows[p][c]) == 0) ++p;
    if (p == m) continue;
    std::swap(rows[p], rows[r]);
    std::swap(rhs[p], rhs[r]);
    Rational inv = 1 / rows[r][c];
    for (size_t j = c; j < n; ++j) rows[r][j] *= inv;
    rhs[r] *= inv;
    for (size_t i = 0; i < m; ++i) {
      if (i == r || sgn(rows[i][c]) == 0) continue;
      Rational f = rows[i][c];
      for (size_t j = c; j < n; ++j) rows[i][j] -= f * rows[r][j];
      rhs[i] -= f * rhs[r];
    }
    pivot_col.push_back(static_cast<int>(c));
    ++r;
  }
  for (size_t i = r; i < m; ++i) {
    if (sgn(rhs[i]) != 0) return std::nullopt;
  }
  std::vector<Rational> sol(n, 0);
  for (size_t i = 0; i < r; ++i) sol[pivot_col[i]] = rhs[i];
  return sol;
}

// Reduces a dense polynomial in zeta_n modulo Phi_n.
std::vector<Rational> reduce_mod_phi(std::vector<Rational> dense, int n) {
  const auto& phi = cyclotomic_coefficients(n);
  const int deg = static_cast<int>(phi.size()) - 1;
  // zeta^n = 1 first, keeps the division short.
  if (static_cast<int>(dense.size()) > n) {
    for (size_t i = n; i < dense.size(); ++i) dense[i % n] += dense[i];
    dense.resize(n);
  }
  for (int i = static_cast<int>(dense.size()) - 1; i >= deg; --i) {
    if (sgn(dense[i]) == 0) continue;
    Rational c = dense[i];
    for (int j = 0; j <= deg; ++j) {
      if (phi[j] != 0) dense[i - deg + j] -= c * phi[j];
    }
  }
  dense.resize(deg, 0);
  return dense;
}

int lcm_int(int a, int b) { return std::lcm(a, b); }

}  // namespace

const std::vector<Integer>& cyclotomic_coefficients(int n) {
  if (n < 1) throw DomainError("cyclotomic polynomial index must be positive");
  static std::mutex mutex;
  static std::map<int, std::vector<Integer>> cache;
  {
    std::lock_guard lock(mutex);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
  }
  std::vector<Integer> coeffs;
  if (n == 1) {
    coeffs = {-1, 1};
  } else {
    coeffs = compute_cyclotomic(n);
  }
  std::lock_guard lock(mutex);
  // std::map never invalidates references on insert.
  return cache.emplace(n, std::move(coeffs)).first->second;
}

Cyclotomic Cyclotomic::from_powers(int conductor, const std::vector<Rational>& powers) {
  if (conductor < 1) throw DomainError("conductor must be positive");
  return Cyclotomic(conductor, reduce_mod_phi(powers, conductor));
}

Cyclotomic Cyclotomic::zeta(int conductor, long power) {
  if (conductor < 1) throw DomainError("conductor must be positive");
  long p = power % conductor;
  if (p < 0) p += conductor;
  std::vector<Rational> dense(p + 1, 0);
  dense[p] = 1;
  return from_powers(conductor, dense);
}

bool Cyclotomic::is_zero() const {
  for (const auto& c : coeffs_) {
    if (sgn(c) != 0) return false;
  }
  return true;
}

bool Cyclotomic::is_rational() const {
  for (size_t i = 1; i < coeffs_.size(); ++i) {
    if (sgn(coeffs_[i]) != 0) return false;
  }
  return true;
}

Rational Cyclotomic::to_rational() const {
  if (!is_rational()) throw DomainError("cyclotomic value is not rational: " + str());
  return coeffs_[0];
}

Cyclotomic Cyclotomic::lifted(int conductor) const {
  if (conductor == conductor_) return *this;
  if (conductor % conductor_ != 0) {
    throw ShapeError("cannot lift conductor " + std::to_string(conductor_) + " to " +
                     std::to_string(conductor));
  }
  if (is_rational()) {
    std::vector<Rational> c(euler_phi(conductor), 0);
    c[0] = coeffs_[0];
    return Cyclotomic(conductor, std::move(c));
  }
  const int step = conductor / conductor_;
  std::vector<Rational> dense(conductor, 0);
  for (size_t i = 0; i < coeffs_.size(); ++i) dense[i * step] = coeffs_[i];
  return Cyclotomic(conductor, reduce_mod_phi(std::move(dense), conductor));
}

Cyclotomic Cyclotomic::normalized() const {
  if (is_rational()) return Cyclotomic(coeffs_[0]);
  for (int m = 2; m < conductor_; ++m) {
    if (conductor_ % m != 0) continue;
    const int pm = euler_phi(m);
    const int pn = static_cast<int>(coeffs_.size());
    // Columns: lifts of zeta_m^j into Q(zeta_N).
    std::vector<std::vector<Rational>> rows(pn, std::vector<Rational>(pm, 0));
    for (int j = 0; j < pm; ++j) {
      Cyclotomic col = zeta(m, j).lifted(conductor_);
      for (int i = 0; i < pn; ++i) rows[i][j] = col.coeffs_[i];
    }
    auto sol = solve_rational(rows, coeffs_);
    if (sol) return Cyclotomic(m, std::move(*sol));
  }
  return *this;
}

Cyclotomic Cyclotomic::galois(int t) const {
  if (std::gcd(t, conductor_) != 1) throw DomainError("galois exponent must be a unit");
  if (is_rational()) return *this;
  long tt = t % conductor_;
  if (tt < 0) tt += conductor_;
  std::vector<Rational> dense(conductor_, 0);
  for (size_t i = 0; i < coeffs_.size(); ++i) dense[(i * tt) % conductor_] += coeffs_[i];
  return Cyclotomic(conductor_, reduce_mod_phi(std::move(dense), conductor_));
}

Cyclotomic Cyclotomic::conj() const { return galois(-1); }

Cyclotomic Cyclotomic::inverse() const {
  if (is_zero()) throw DivisibilityError("division by zero in cyclotomic field");
  if (is_rational()) return Cyclotomic(Rational(1 / coeffs_[0]));
  const int n = static_cast<int>(coeffs_.size());
  std::vector<std::vector<Rational>> rows(n, std::vector<Rational>(n, 0));
  for (int j = 0; j < n; ++j) {
    Cyclotomic col = *this * zeta(conductor_, j);
    for (int i = 0; i < n; ++i) rows[i][j] = col.coeffs_[i];
  }
  std::vector<Rational> rhs(n, 0);
  rhs[0] = 1;
  auto sol = solve_rational(std::move(rows), std::move(rhs));
  if (!sol) throw DivisibilityError("cyclotomic element is not invertible");
  return Cyclotomic(conductor_, std::move(*sol));
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
  if (o.conductor_ == 1) {
    coeffs_[0] += o.coeffs_[0];
    return *this;
  }
  if (conductor_ != o.conductor_) {
    const int m = lcm_int(conductor_, o.conductor_);
    *this = lifted(m);
    Cyclotomic b = o.lifted(m);
    for (size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += b.coeffs_[i];
    return *this;
  }
  for (size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) { return *this += -o; }

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& o) {
  if (o.conductor_ == 1) {
    for (auto& c : coeffs_) c *= o.coeffs_[0];
    return *this;
  }
  if (conductor_ == 1) {
    Rational s = coeffs_[0];
    *this = o;
    for (auto& c : coeffs_) c *= s;
    return *this;
  }
  const int m = lcm_int(conductor_, o.conductor_);
  Cyclotomic a = lifted(m);
  Cyclotomic b = o.lifted(m);
  std::vector<Rational> dense(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (sgn(a.coeffs_[i]) == 0) continue;
    for (size_t j = 0; j < b.coeffs_.size(); ++j) {
      if (sgn(b.coeffs_[j]) == 0) continue;
      dense[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  conductor_ = m;
  coeffs_ = reduce_mod_phi(std::move(dense), m);
  return *this;
}

Cyclotomic& Cyclotomic::operator/=(const Cyclotomic& o) { return *this *= o.inverse(); }

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.conductor_ == b.conductor_) return a.coeffs_ == b.coeffs_;
  if (a.is_rational() && b.is_rational()) return a.coeffs_[0] == b.coeffs_[0];
  const int m = lcm_int(a.conductor_, b.conductor_);
  return a.lifted(m).coeffs_ == b.lifted(m).coeffs_;
}

std::string Cyclotomic::str() const {
  std::ostringstream out;
  bool first = true;
  const std::string z = "z" + std::to_string(conductor_);
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    const Rational& c = coeffs_[i];
    if (sgn(c) == 0) continue;
    Rational mag = abs(c);
    if (first) {
      if (sgn(c) < 0) out << "-";
    } else {
      out << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      out << to_string(mag);
      continue;
    }
    if (mag != 1) out << to_string(mag) << "*";
    out << z;
    if (i > 1) out << "^" << i;
  }
  if (first) return "0";
  return out.str();
}

Cyclotomic sqrt_minus_3() { return Cyclotomic::zeta(3) * 2 + 1; }

}  // namespace cmspets
