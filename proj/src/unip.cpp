#include "cmspets/unip.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace cmspets {

RatPoly generic_degree_A(const Partition& lambda) {
  const int n = lambda.size();
  auto q_power_minus_one = [](int k) {
    std::vector<Rational> c(k + 1, 0);
    c[0] = -1;
    c[k] = 1;
    return RatPoly(std::move(c));
  };
  RatPoly num = RatPoly::monomial(1, a_invariant(lambda));
  for (int k = 1; k <= n; ++k) num *= q_power_minus_one(k);
  RatPoly den(Rational(1));
  for (int h : hooks(lambda)) den *= q_power_minus_one(h);
  try {
    return num.divexact(den);
  } catch (const DivisibilityError&) {
    throw std::logic_error("hook formula is not a polynomial for " + lambda.str());
  }
}

bool is_d_cuspidal_A(const Partition& lambda, int d) {
  if (d < 1) throw DomainError("d must be positive");
  const int n = lambda.size();
  const RatPoly deg = generic_degree_A(lambda);
  if (d == 1) return cyclotomic_valuation(deg, 1) >= n - 1;
  return root_multiplicity(deg, Cyclotomic::zeta(d, 1)) >= n / d;
}

namespace {

// Orbits of G(d,1,r) in table order: transpositions (r >= 2), then diagonal (d >= 2).
Parameter wreath_parameter(int d, int r, const std::vector<Rational>& transposition,
                           const std::vector<Rational>& diagonal) {
  Parameter k;
  if (r >= 2) k.values.push_back(transposition);
  if (d >= 2 && r >= 1) k.values.push_back(diagonal);
  return k;
}

std::vector<Rational> pair_of(long a, long b) { return {Rational(a), Rational(b)}; }

}  // namespace

std::vector<SeriesBlock> d_series_A(int n, int d) {
  if (n < 1 || d < 1) throw DomainError("d_series_A needs n >= 1 and d >= 1");
  std::set<Partition> cores;
  for (const auto& p : partitions_of(n)) cores.insert(d_core(p, d));
  std::vector<SeriesBlock> out;
  for (auto it = cores.rbegin(); it != cores.rend(); ++it) {
    SeriesBlock b;
    b.core = *it;
    b.r = (n - b.core.size()) / d;
    for (const auto& mu : multipartitions_of(d, b.r)) {
      b.labels.push_back(mu);
      b.members.push_back(par_d(b.core, mu));
    }
    std::vector<Rational> kseq;
    if (d >= 2 && b.r >= 1) {
      for (int v : k_l_sequences(b.core, d).k) kseq.emplace_back(v);
    }
    b.pair.parabolic = "GL" + std::to_string(b.core.size()) + " x T" + std::to_string(d) + "^" +
                       std::to_string(b.r);
    b.pair.cuspidal = b.core.str();
    b.pair.relative = GroupDescriptor::wreath(d, b.r);
    b.pair.parameter = wreath_parameter(d, b.r, pair_of(d, 0), kseq);
    out.push_back(std::move(b));
  }
  return out;
}

int ennola_dual(int d) {
  if (d < 1) throw DomainError("d must be positive");
  if (d % 2 == 1) return 2 * d;
  if (d % 4 == 2) return d / 2;
  return d;
}

std::string to_string(ClassicalType type) {
  switch (type) {
    case ClassicalType::B: return "B";
    case ClassicalType::Dplus: return "D+";
    case ClassicalType::Dminus: return "D-";
  }
  return "?";
}

namespace {

ClassicalRow row_k_bracket(int r, int s, int m) {
  ClassicalRow row;
  row.r = r;
  row.relative = GroupDescriptor::wreath(2, m);
  row.relative_name = "W_" + std::to_string(m);
  row.parameter_name = "k[" + std::to_string(s) + "]";
  row.parameter = wreath_parameter(2, m, pair_of(1, 0), pair_of(s, 0));
  return row;
}

ClassicalRow row_type_d_spetsial(int r, int n) {
  ClassicalRow row;
  row.r = r;
  row.relative = GroupDescriptor::type_d(n);
  row.relative_name = "W'_" + std::to_string(n);
  row.parameter_name = "k_sp";
  row.parameter = parameter_of({{1, 0}});
  return row;
}

ClassicalRow type_d_row(int r, int j, int n) {
  if (r == 0 && j == 0) return row_type_d_spetsial(r, n);
  if (r == 0) return row_k_bracket(r, 2, n - 1);
  return row_k_bracket(r, 2 * r, n - r * r);
}

// Harish-Chandra side: cuspidal unipotents of the Levi of rank m, then the endomorphism algebra.
std::vector<ClassicalRow> hc_side(ClassicalType type, int n) {
  std::vector<ClassicalRow> rows;
  for (int m = 0; m <= n; ++m) {
    if (type == ClassicalType::B) {
      for (int r = 0; r * r + r <= m; ++r) {
        if (r * r + r == m) rows.push_back(row_k_bracket(r, 2 * r + 1, n - m));
      }
      continue;
    }
    const int j = type == ClassicalType::Dplus ? 0 : 1;
    for (int r = 0; r * r <= m; ++r) {
      if (r * r != m) continue;
      const bool cuspidal = j == 0 ? r % 2 == 0 : (r % 2 == 1 || r == 0);
      // r = 1 gives the same pair as r = 0.
      if (cuspidal && r != 1) rows.push_back(type_d_row(r, j, n));
    }
  }
  return rows;
}

// Calogero-Moser side: cuspidal points and the normalisations of the leaf closures.
std::vector<ClassicalRow> cm_side(ClassicalType type, int n) {
  std::vector<ClassicalRow> rows;
  if (type == ClassicalType::B) {
    // The cuspidal point of rank m is labelled by the bipartition (r^(r+1), -).
    for (int r = 0;; ++r) {
      const Partition rect(std::vector<int>(r + 1, r));
      if (rect.size() > n) break;
      rows.push_back(row_k_bracket(r, 2 * r + 1, n - rect.size()));
    }
    return rows;
  }
  const int j = type == ClassicalType::Dplus ? 0 : 1;
  rows.push_back(type_d_row(0, j, n));
  for (int r = 2; r * r <= n; ++r) {
    if (r % 2 == j) rows.push_back(type_d_row(r, j, n));
  }
  return rows;
}

std::string row_text(const ClassicalRow& row) {
  return "r=" + std::to_string(row.r) + " " + row.relative_name + " " + row.parameter_name + " " +
         row.parameter.str();
}

}  // namespace

ClassicalComparison classical_hc(ClassicalType type, int n) {
  if (type == ClassicalType::B && n < 2) throw DomainError("type B needs n >= 2");
  if (type != ClassicalType::B && n < 4) throw DomainError("type D needs n >= 4");
  if (n > 40) throw DomainError("classical tables are limited to n <= 40");
  ClassicalComparison c;
  c.type = type;
  c.n = n;
  c.hc_side = hc_side(type, n);
  c.cm_side = cm_side(type, n);
  auto by_r = [](std::vector<ClassicalRow> rows) {
    std::map<int, ClassicalRow> m;
    for (auto& row : rows) m.emplace(row.r, std::move(row));
    return m;
  };
  const auto hc = by_r(c.hc_side);
  const auto cm = by_r(c.cm_side);
  for (const auto& [r, row] : hc) {
    auto it = cm.find(r);
    if (it == cm.end()) {
      c.diff.push_back("only on the Harish-Chandra side: " + row_text(row));
    } else if (!(it->second == row)) {
      c.diff.push_back("rows differ: " + row_text(row) + " vs " + row_text(it->second));
    }
  }
  for (const auto& [r, row] : cm) {
    if (!hc.count(r)) c.diff.push_back("only on the Calogero-Moser side: " + row_text(row));
  }
  return c;
}

std::string Symbol::str() const {
  auto join = [](const std::vector<int>& v) {
    std::string s;
    for (size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + std::to_string(v[i]);
    return s;
  };
  return "(" + join(top) + " | " + join(bottom) + ")";
}

SymbolCheck symbol_check(int r) {
  if (r < 1) throw DomainError("symbol_check needs r >= 1");
  SymbolCheck s;
  for (int i = 1; i <= 2 * r + 1; ++i) s.cuspidal.top.push_back(i);
  for (int i = r + 1; i <= 2 * r + 1; ++i) s.principal.top.push_back(i);
  for (int i = 1; i <= r; ++i) s.principal.bottom.push_back(i);
  std::multiset<int> a(s.cuspidal.top.begin(), s.cuspidal.top.end());
  a.insert(s.cuspidal.bottom.begin(), s.cuspidal.bottom.end());
  std::multiset<int> b(s.principal.top.begin(), s.principal.top.end());
  b.insert(s.principal.bottom.begin(), s.principal.bottom.end());
  s.same_entries = a == b;
  return s;
}

std::pair<int, Parameter> rank2_datum(GroupKind kind) {
  switch (kind) {
    case GroupKind::B2: return {4, parameter_of({{0, 1, 2, 1}})};
    case GroupKind::G2: return {6, parameter_of({{0, 1, 2, 1, 1, 1}})};
    default: throw DomainError("rank2_datum covers B2 and G2");
  }
}

std::vector<MichelCase> michel_identity_A(int n, int d) {
  if (d < 1 || n < 1 || n % d != 0 || n > 10) throw DomainError("michel identity needs d | n <= 10");
  const Partition wd(std::vector<int>(n / d, d));
  std::map<Partition, Integer> rhs;
  for (const auto& psi : multipartitions_of(d, n / d)) {
    const Integer deg = multitableaux(psi);
    rhs[par_d(Partition(), psi)] += deg * deg;
  }
  std::vector<MichelCase> out;
  for (const auto& lambda : partitions_of(n)) {
    MichelCase c;
    c.lambda = lambda;
    const Integer v = mn_character(lambda, wd);
    c.lhs = v * v;
    auto it = rhs.find(lambda);
    c.rhs = it == rhs.end() ? Integer(0) : it->second;
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace cmspets
