#include <numeric>

#include "doctest.h"
#include "cmspets/chartab.hpp"
#include "cmspets/linalg.hpp"

using namespace cmspets;

namespace {

// Semistandard tableaux of shape lambda and content mu, peeling horizontal strips.
long kostka(const Partition& lambda, std::vector<int> mu) {
  if (mu.empty()) return lambda.empty() ? 1 : 0;
  const int m = mu.back();
  mu.pop_back();
  long total = 0;
  // Choose rows of the smaller shape nu with lambda_{i+1} <= nu_i <= lambda_i.
  std::vector<int> nu(lambda.length(), 0);
  std::function<void(int, int)> rec = [&](int i, int left) {
    if (i == lambda.length()) {
      if (left == 0) total += kostka(Partition(nu), mu);
      return;
    }
    for (int take = 0; take <= left && take <= lambda[i] - lambda[i + 1]; ++take) {
      nu[i] = lambda[i] - take;
      rec(i + 1, left - take);
    }
  };
  rec(0, m);
  return total;
}

// Tabloids of shape mu fixed by a permutation of cycle type rho.
long tabloid_fixed(const std::vector<int>& rho, size_t idx, std::vector<int>& rows) {
  if (idx == rho.size()) {
    for (int r : rows) {
      if (r != 0) return 0;
    }
    return 1;
  }
  long total = 0;
  for (auto& r : rows) {
    if (r >= rho[idx]) {
      r -= rho[idx];
      total += tabloid_fixed(rho, idx + 1, rows);
      r += rho[idx];
    }
  }
  return total;
}

// chi_lambda(rho) from pi_mu = sum_lambda K_{lambda mu} chi_lambda.
std::vector<std::vector<Rational>> young_rule_table(int n) {
  const auto parts = partitions_of(n);
  const size_t p = parts.size();
  std::vector<std::vector<Rational>> table(p, std::vector<Rational>(p));
  for (size_t c = 0; c < p; ++c) {
    // Augmented system: rows mu, unknowns chi_lambda(rho_c).
    Matrix<Rational> sys(p, std::vector<Rational>(p + 1));
    for (size_t m = 0; m < p; ++m) {
      for (size_t l = 0; l < p; ++l) sys[m][l] = kostka(parts[l], parts[m].parts());
      std::vector<int> rows = parts[m].parts();
      sys[m][p] = tabloid_fixed(parts[c].parts(), 0, rows);
    }
    rref(sys);
    for (size_t l = 0; l < p; ++l) table[l][c] = sys[l][p];
  }
  return table;
}

Rational sum_sq_degrees(const CharacterTable& t) {
  Rational s = 0;
  for (int i = 0; i < t.num_irr(); ++i) s += t.degree(i) * t.degree(i);
  return s;
}

Integer total_size(const CharacterTable& t) {
  return std::accumulate(t.class_sizes.begin(), t.class_sizes.end(), Integer(0));
}

}  // namespace

TEST_CASE("Murnaghan-Nakayama against Young's rule") {
  CHECK(kostka(Partition({2, 1}), {1, 1, 1}) == 2);
  for (int n = 1; n <= 6; ++n) {
    const auto t = table_symmetric(n);
    const auto parts = partitions_of(n);
    const auto oracle = young_rule_table(n);
    for (size_t l = 0; l < parts.size(); ++l) {
      for (size_t c = 0; c < parts.size(); ++c) {
        CHECK(mn_character(parts[l], parts[c]) == oracle[l][c]);
        const int irr = t.irr_index(parts[l].str());
        const int cls = t.class_index(parts[c].str());
        CHECK(t.values[irr][cls] == Cyclotomic(oracle[l][c]));
      }
    }
  }
}

TEST_CASE("orders, degrees and orthogonality") {
  auto check = [](const CharacterTable& t, long order) {
    CHECK(total_size(t) == order);
    CHECK(t.group.order == order);
    CHECK(sum_sq_degrees(t) == order);
    CHECK(!check_column_orthogonality(t));
    CHECK(!check_row_orthogonality(t));
  };
  long fact = 1;
  for (int n = 1; n <= 7; ++n) {
    fact *= n;
    check(table_symmetric(n), fact);
  }
  check(table_wreath(2, 3), 48);
  check(table_wreath(3, 2), 18);
  check(table_wreath(4, 2), 32);
  check(table_wreath(6, 1), 6);
  check(table_hardcoded(GroupKind::B2), 8);
  check(table_hardcoded(GroupKind::G2), 12);
  check(table_hardcoded(GroupKind::G4), 24);
}

TEST_CASE("identifications between tables") {
  for (int r = 1; r <= 5; ++r) CHECK(tables_equivalent(table_wreath(1, r), table_symmetric(r)));
  CHECK(tables_equivalent(table_wreath(2, 2), table_hardcoded(GroupKind::B2)));
  CHECK(!tables_equivalent(table_symmetric(3), table_wreath(3, 1)));
  CHECK(!tables_equivalent(table_wreath(2, 2), table_symmetric(4)));

  // mu_d: every entry is a power of zeta_d and the rows are the d characters z -> z^i.
  const int d = 5;
  const auto c = table_wreath(d, 1);
  CHECK(c.num_classes() == d);
  for (int i = 0; i < d; ++i) {
    CHECK(c.degree(i) == 1);
    const Cyclotomic gen = c.values[i][(c.identity_class + 1) % d];
    bool is_root = false;
    for (int k = 0; k < d; ++k) is_root = is_root || gen == Cyclotomic::zeta(d, k);
    CHECK(is_root);
  }
}

TEST_CASE("reflection data") {
  const auto s4 = table_symmetric(4);
  REQUIRE(s4.orbits.size() == 1);
  CHECK(s4.orbits[0].size == 6);
  CHECK(s4.reflection_count() == 6);
  for (int c = 0; c < s4.num_classes(); ++c) CHECK(s4.cod[c] == 4 - s4.class_partitions[c].length());

  const auto g4 = table_hardcoded(GroupKind::G4);
  REQUIRE(g4.orbits.size() == 1);
  CHECK(g4.orbits[0].e == 3);
  CHECK(g4.orbits[0].size == 4);
  CHECK(g4.reflection_count() == 8);
  CHECK(g4.degree(g4.irr_index("phi3,2")) == 3);

  const auto b2 = table_hardcoded(GroupKind::B2);
  CHECK(b2.orbits.size() == 2);
  CHECK(b2.reflection_count() == 4);
  CHECK(table_hardcoded(GroupKind::G2).reflection_count() == 6);

  const auto w = table_wreath(3, 2);
  REQUIRE(w.orbits.size() == 2);
  CHECK(w.orbits[0].name == "transpositions");
  CHECK(w.orbits[0].size == 3);
  CHECK(w.orbits[1].e == 3);
  CHECK(w.orbits[1].size == 2);
}

TEST_CASE("caps and labels") {
  CHECK_THROWS(table_symmetric(11));
  CHECK_THROWS(table_wreath(5, 3));
  CHECK(parse_group_kind("G4") == GroupKind::G4);
  CHECK(!parse_group_kind("G5"));
  CHECK(GroupDescriptor::wreath(2, 3).name() == "G(2,1,3)");
  auto broken = table_symmetric(3);
  broken.values[0][1] = Cyclotomic(5);
  CHECK(check_column_orthogonality(broken).has_value());
}
