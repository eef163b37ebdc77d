#include <set>

#include "doctest.h"
#include "cmspets/unip.hpp"

using namespace cmspets;

namespace {

std::vector<int> ranks(ClassicalType type, int n) {
  std::vector<int> v;
  for (const auto& row : classical_hc(type, n).hc_side) v.push_back(row.r);
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

TEST_CASE("generic degrees in type A") {
  CHECK(generic_degree_A(Partition({2, 1})).str() == "q^2 + q");
  CHECK(generic_degree_A(Partition({3})) == RatPoly(1));
  for (int n = 1; n <= 6; ++n) {
    const RatPoly col = generic_degree_A(Partition(std::vector<int>(n, 1)));
    CHECK(col == RatPoly::monomial(1, n * (n - 1) / 2));
    CHECK(a_A_of(col) == std::make_pair(n * (n - 1) / 2, n * (n - 1) / 2));
  }
  // At q = 1 the degree is the number of standard tableaux.
  for (int n = 1; n <= 9; ++n) {
    for (const auto& l : partitions_of(n)) {
      CHECK(generic_degree_A(l).evaluate(Rational(1)) == Rational(standard_tableaux(l)));
      CHECK(a_A_of(generic_degree_A(l)).first == a_invariant(l));
    }
  }
  CHECK_THROWS_AS(a_A_of(RatPoly()), DomainError);
}

TEST_CASE("cuspidality") {
  CHECK(is_d_cuspidal_A(Partition({2, 1}), 2));
  CHECK(!is_d_cuspidal_A(Partition({3}), 2));
  CHECK(is_d_cuspidal_A(Partition({1}), 1));
  for (int n = 2; n <= 7; ++n) {
    for (const auto& l : partitions_of(n)) CHECK(!is_d_cuspidal_A(l, 1));
  }
}

TEST_CASE("d-series in type A") {
  const auto blocks = d_series_A(3, 2);
  REQUIRE(blocks.size() == 2);
  std::multiset<size_t> sizes;
  for (const auto& b : blocks) sizes.insert(b.members.size());
  CHECK(sizes == std::multiset<size_t>{1, 2});

  for (int n = 2; n <= 6; ++n) {
    for (const auto& b : d_series_A(n, n)) {
      if (!b.core.empty()) continue;
      CHECK(b.pair.relative == GroupDescriptor::wreath(n, 1));
      std::vector<long> base(n);
      for (int j = 0; j < n; ++j) base[j] = j;
      CHECK(b.pair.parameter == parameter_of({base}));
    }
  }
  for (const auto& b : d_series_A(8, 3)) {
    CHECK(b.pair.parameter.values.size() == static_cast<size_t>((b.r >= 2) + (b.r >= 1)));
  }
  CHECK(ennola_dual(1) == 2);
  CHECK(ennola_dual(2) == 1);
  CHECK(ennola_dual(3) == 6);
  CHECK(ennola_dual(4) == 4);
  CHECK(ennola_dual(6) == 3);
}

TEST_CASE("classical types") {
  CHECK(ranks(ClassicalType::B, 2) == std::vector<int>{0, 1});
  CHECK(ranks(ClassicalType::B, 6) == std::vector<int>{0, 1, 2});
  CHECK(ranks(ClassicalType::Dplus, 4) == std::vector<int>{0, 2});
  for (const auto& row : classical_hc(ClassicalType::B, 6).hc_side) {
    if (row.r == 2) {
      CHECK(row.relative_name == "W_0");
      CHECK(row.parameter_name == "k[5]");
    }
  }
  for (int n = 4; n <= 16; ++n) {
    for (ClassicalType t : {ClassicalType::B, ClassicalType::Dplus, ClassicalType::Dminus}) {
      const auto c = classical_hc(t, n);
      CHECK(c.diff.empty());
      CHECK(c.hc_side == c.cm_side);
    }
  }
  CHECK_THROWS(classical_hc(ClassicalType::Dplus, 3));
  CHECK_THROWS(classical_hc(ClassicalType::B, 1));

  const SymbolCheck s = symbol_check(1);
  CHECK(s.cuspidal.top == std::vector<int>{1, 2, 3});
  CHECK(s.principal.top == std::vector<int>{2, 3});
  CHECK(s.principal.bottom == std::vector<int>{1});
  CHECK(s.same_entries);
  for (int r = 1; r <= 10; ++r) {
    CHECK(symbol_check(r).cuspidal.defect() == 2 * r + 1);
    CHECK(symbol_check(r).principal.defect() == 1);
  }
}

TEST_CASE("the G4 datum") {
  const SpetsDatum& g = g4_datum();
  CHECK(g.unipotents.size() == 10);
  const CycPoly q = CycPoly::monomial(Cyclotomic(1), 1);
  const CycPoly phi2 = to_cyclotomic(cyclotomic_polynomial(2));
  const CycPoly phi6 = to_cyclotomic(cyclotomic_polynomial(6));
  const CycPoly expected = CycPoly(Cyclotomic(Rational(1, 2))) * q * q * q * q * phi2 * phi2 * phi6;
  CHECK(g.unipotent("rho2,5").degree == expected);
  CHECK(a_A_of(g.unipotent("rho3,2").degree) == std::make_pair(2, 6));

  for (const auto& s : g.series) {
    if (s.name == "(1,1)4") {
      CHECK(std::set<std::string>(s.members.begin(), s.members.end()) ==
            std::set<std::string>{"rho1,0", "rho2,5", "rho3,2", "cusG4"});
    }
  }
  const std::map<std::string, int> aA = {{"club", 0}, {"diamond", 8}, {"heart", 6}, {"spade", 12}};
  for (size_t f = 0; f < g.families.names.size(); ++f) {
    for (const auto& label : g.families.blocks[f]) {
      auto [a, A] = a_A_of(g.unipotent(label).degree);
      CHECK(a + A == aA.at(g.families.names[f]));
    }
  }
  for (const auto& line : g4_consistency()) {
    INFO(line.id << ": " << line.detail);
    CHECK(line.pass);
  }
  CHECK_THROWS_AS(g.unipotent("rho9,9"), DomainError);
}

TEST_CASE("G4 degrees at q = 1") {
  // The printed constants give chi(1) for every principal series row except
  // rho2,1 and rho2,3, which come out as 1 +- sqrt(-3); exchanging their two
  // constants would give 2 for both.
  const auto at1 = g4_degrees_at_one();
  CHECK(at1.at("rho1,0") == Cyclotomic(1));
  CHECK(at1.at("rho1,4") == Cyclotomic(1));
  CHECK(at1.at("rho1,8") == Cyclotomic(1));
  CHECK(at1.at("rho2,5") == Cyclotomic(2));
  CHECK(at1.at("rho3,2") == Cyclotomic(3));
  CHECK(at1.at("rho2,1") == Cyclotomic(1) + sqrt_minus_3());
  CHECK(at1.at("rho2,3") == Cyclotomic(1) - sqrt_minus_3());
  CHECK(at1.at("cusG4") == Cyclotomic(0));
  CHECK(at1.at("rhoC3,+") == Cyclotomic(0));
}

TEST_CASE("Michel identity") {
  for (const auto& c : michel_identity_A(4, 2)) CHECK(c.pass());
  for (const auto& c : michel_identity_A(5, 5)) {
    const bool hook = c.lambda.length() + c.lambda[0] == 6;
    CHECK(c.lhs == (hook ? 1 : 0));
  }
  CHECK_THROWS(michel_identity_A(6, 4));
  CHECK(rank2_datum(GroupKind::B2) == std::make_pair(4, parameter_of({{0, 1, 2, 1}})));
  CHECK(rank2_datum(GroupKind::G2) == std::make_pair(6, parameter_of({{0, 1, 2, 1, 1, 1}})));
}
