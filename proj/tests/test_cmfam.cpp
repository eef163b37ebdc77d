#include <algorithm>
#include <map>
#include <numeric>

#include "doctest.h"
#include "cmspets/cmfam.hpp"
#include "cmspets/linalg.hpp"

using namespace cmspets;

namespace {

// Cycle type of a permutation in one-line notation.
Partition cycle_type(const std::vector<int>& p) {
  std::vector<bool> seen(p.size(), false);
  std::vector<int> lens;
  for (size_t i = 0; i < p.size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (size_t j = i; !seen[j]; j = p[j]) {
      seen[j] = true;
      ++len;
    }
    lens.push_back(len);
  }
  std::sort(lens.rbegin(), lens.rend());
  return Partition(lens);
}

// Class sum products by multiplying permutations: coefficient of class k in C_i C_j.
std::vector<Rational> brute_class_product(const CharacterTable& t, int n, int ci, int cj) {
  std::vector<std::vector<int>> perms;
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  auto cls = [&](const std::vector<int>& x) { return t.class_index(cycle_type(x).str()); };
  std::vector<Rational> hits(t.num_classes(), 0);
  for (const auto& g : perms) {
    if (cls(g) != ci) continue;
    for (const auto& h : perms) {
      if (cls(h) != cj) continue;
      std::vector<int> gh(n);
      for (int i = 0; i < n; ++i) gh[i] = g[h[i]];
      hits[cls(gh)] += 1;
    }
  }
  for (int k = 0; k < t.num_classes(); ++k) hits[k] /= Rational(t.class_sizes[k]);
  return hits;
}

int content_sum(const Partition& l) {
  int s = 0;
  for (int r = 0; r < l.length(); ++r) {
    for (int c = 0; c < l[r]; ++c) s += c - r;
  }
  return s;
}

}  // namespace

TEST_CASE("parameters") {
  const Parameter k = Parameter::parse("(3,0,1,0)");
  CHECK(k == parameter_of({{3, 0, 1, 0}}));
  CHECK(k.str() == "(3,0,1,0)");
  CHECK(k.at(0, 5) == 0);
  CHECK(k.at(0, -1) == 0);
  CHECK(k.at(0, -2) == 1);
  CHECK(Parameter::parse("(1,0);(1/2,0)").values.size() == 2);
  CHECK_THROWS(Parameter::parse("(1,x)"));

  const Parameter a = parameter_of({{0, 1, 2}});
  CHECK(sharp(a) == parameter_of({{0, 2, 1}}));
  CHECK(sharp(sharp(a)) == a);
  CHECK(shift_equivalent(a, parameter_of({{5, 6, 7}}), false));
  CHECK(!shift_equivalent(a, parameter_of({{1, 2, 0}}), false));
  CHECK(shift_equivalent(a, parameter_of({{1, 2, 0}}), true));

  const auto t = table_symmetric(4);
  CHECK(spetsial_parameter(t) == parameter_of({{1, 0}}));
  CHECK_NOTHROW(check_parameter_shape(t, parameter_of({{1, 0}})));
  CHECK_THROWS_AS(check_parameter_shape(t, parameter_of({{1, 0, 0}})), ShapeError);
}

TEST_CASE("c_k on mu_3 inverted by a Fourier solve") {
  const auto t = table_wreath(3, 1);
  const Parameter k = parameter_of({{2, -1, 5}});
  const Cyclotomic z = Cyclotomic::zeta(3);
  // sum_j zeta^(aj) (k_j - k_{j+1}) = (zeta^a - 1) c_k(s^a), and 0 for a = 0;
  // the a = 0 row is replaced by k_0 - k_1 to pin the solution.
  Matrix<Cyclotomic> sys(3, std::vector<Cyclotomic>(4, Cyclotomic(0)));
  sys[0][0] = 1;
  sys[0][3] = Cyclotomic(Rational(k.at(0, 0) - k.at(0, 1)));
  for (int a = 1; a < 3; ++a) {
    Cyclotomic za = Cyclotomic::zeta(3, a);
    for (int j = 0; j < 3; ++j) sys[a][j] = Cyclotomic::zeta(3, a * j);
    sys[a][3] = (za - Cyclotomic(1)) * c_of_k(t, k, 0, a);
  }
  rref(sys);
  for (int j = 0; j < 3; ++j) CHECK(sys[j][3] == Cyclotomic(k.at(0, j) - k.at(0, j + 1)));
  // c_k only depends on k up to a constant shift.
  CHECK(c_of_k(t, parameter_of({{5, 2, 8}}), 0, 1) == c_of_k(t, k, 0, 1));
  CHECK(z * z * z == Cyclotomic(1));
  CHECK_THROWS_AS(c_of_k(t, k, t.identity_class), DomainError);
}

TEST_CASE("Euler invariant of S_n from contents") {
  for (int n = 1; n <= 7; ++n) {
    const auto t = table_symmetric(n);
    const Parameter ksp = spetsial_parameter(t);
    for (int i = 0; i < t.num_irr(); ++i) {
      const Cyclotomic w = euler_invariant(t, ksp, i);
      CHECK(w == Cyclotomic(n * (n - 1) / 2 + content_sum(t.irr_partitions[i])));
    }
  }
}

TEST_CASE("center products against permutation multiplication") {
  const int n = 4;
  const auto t = table_symmetric(n);
  for (int i = 0; i < t.num_classes(); ++i) {
    for (int j = 0; j < t.num_classes(); ++j) {
      std::vector<Cyclotomic> x(t.num_classes(), Cyclotomic(0));
      std::vector<Cyclotomic> y(t.num_classes(), Cyclotomic(0));
      x[i] = 1;
      y[j] = 1;
      const auto prod = center_product(t, x, y);
      const auto brute = brute_class_product(t, n, i, j);
      for (int k = 0; k < t.num_classes(); ++k) CHECK(prod[k] == Cyclotomic(brute[k]));
    }
  }
}

TEST_CASE("idempotents") {
  for (GroupKind kind : {GroupKind::B2, GroupKind::G4}) {
    const auto t = table_hardcoded(kind);
    for (int i = 0; i < t.num_irr(); ++i) {
      const auto e = central_idempotent(t, i);
      CHECK(center_product(t, e, e) == e);
      const auto coords = idempotent_coordinates(t, e);
      for (int j = 0; j < t.num_irr(); ++j) CHECK(coords[j] == Cyclotomic(i == j ? 1 : 0));
    }
    const auto ref = reflection_sum_expansion(t);
    CHECK(static_cast<int>(ref.size()) == t.num_irr());
  }
}

TEST_CASE("families at the spetsial parameter") {
  for (GroupKind kind : {GroupKind::B2, GroupKind::G2, GroupKind::G4}) {
    const auto t = table_hardcoded(kind);
    const FamilyPartition f = hardcoded_families(kind);
    CHECK(covers_irreducibles(t, f));
    // The Euler invariant is constant on each family.
    const Parameter ksp = spetsial_parameter(t);
    for (const auto& block : f.blocks) {
      const Cyclotomic w = euler_invariant(t, ksp, t.irr_index(block.front()));
      for (const auto& chi : block) CHECK(euler_invariant(t, ksp, t.irr_index(chi)) == w);
    }
  }
  const auto g4 = table_hardcoded(GroupKind::G4);
  const Parameter ksp = spetsial_parameter(g4);
  CHECK(euler_invariant(g4, ksp, g4.irr_index("phi1,0")) == Cyclotomic(12));
  CHECK(euler_invariant(g4, ksp, g4.irr_index("phi3,2")) == Cyclotomic(4));
  CHECK(euler_invariant(g4, ksp, g4.irr_index("phi2,1")) == Cyclotomic(6));
  CHECK(euler_invariant(g4, ksp, g4.irr_index("phi1,4")) == Cyclotomic(0));
  FamilyPartition bad = hardcoded_families(GroupKind::B2);
  bad.blocks.pop_back();
  CHECK(!covers_irreducibles(table_hardcoded(GroupKind::B2), bad));
}

TEST_CASE("filtration conjecture on small symmetric groups") {
  const FiltrationReport r = check_filtration_conjecture(4, 2);
  CHECK(r.pass());
  CHECK(!r.cases.empty());
  CHECK_THROWS(check_filtration_conjecture(7, 2));
  CHECK_THROWS(check_filtration_conjecture(4, 5));
}
