#include "cmspets/unipoly.hpp"

namespace cmspets {

RatPoly cyclotomic_polynomial(int e) {
  const auto& c = cyclotomic_coefficients(e);
  std::vector<Rational> coeffs;
  coeffs.reserve(c.size());
  for (const auto& x : c) coeffs.emplace_back(x);
  return RatPoly(std::move(coeffs));
}

CycPoly to_cyclotomic(const RatPoly& p) {
  std::vector<Cyclotomic> coeffs;
  coeffs.reserve(p.coeffs().size());
  for (const auto& x : p.coeffs()) coeffs.emplace_back(x);
  return CycPoly(std::move(coeffs));
}

int root_multiplicity(const CycPoly& p, const Cyclotomic& root) {
  if (p.is_zero()) throw DomainError("root multiplicity of the zero polynomial is undefined");
  const CycPoly lin = CycPoly::linear(root);
  CycPoly cur = p;
  int m = 0;
  while (cur.degree() >= 1) {
    auto [q, r] = cur.divmod(lin);
    if (!r.is_zero()) break;
    cur = std::move(q);
    ++m;
  }
  return m;
}

int root_multiplicity(const RatPoly& p, const Cyclotomic& root) {
  return root_multiplicity(to_cyclotomic(p), root);
}

int cyclotomic_valuation(const RatPoly& p, int e) {
  if (p.is_zero()) throw DomainError("valuation of the zero polynomial is undefined");
  const RatPoly phi = cyclotomic_polynomial(e);
  RatPoly cur = p;
  int m = 0;
  while (cur.degree() >= phi.degree()) {
    auto [q, r] = cur.divmod(phi);
    if (!r.is_zero()) break;
    cur = std::move(q);
    ++m;
  }
  return m;
}

RatPoly gcd(RatPoly a, RatPoly b) {
  while (!b.is_zero()) {
    RatPoly r = a.divmod(b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  return a * RatPoly(Rational(1) / a.leading());
}

}  // namespace cmspets
