#include <algorithm>
#include <set>

#include "cmspets/unip.hpp"

namespace cmspets {

namespace {

Cyclotomic z12(long k) { return Cyclotomic::zeta(12, k); }

CycPoly q_pow(int k) { return CycPoly::monomial(Cyclotomic(1).lifted(12), k); }
CycPoly lin(const Cyclotomic& root) { return CycPoly::linear(root.lifted(12)); }
CycPoly phi(int e) { return to_cyclotomic(cyclotomic_polynomial(e)); }
CycPoly scalar(const Cyclotomic& c) { return CycPoly(c.lifted(12)); }

SpetsDatum build_g4() {
  const Cyclotomic zeta3 = z12(4);
  const Cyclotomic zeta6 = z12(2);
  const Cyclotomic sqrt3 = zeta3 * 2 + 1;  // sqrt(-3)
  const CycPoly phi3p = lin(zeta3);
  const CycPoly phi3pp = lin(zeta3.inverse());
  const CycPoly phi6p = lin(zeta6);
  const CycPoly phi6pp = lin(zeta6.inverse());
  const Cyclotomic sixth(Rational(1, 6));
  const Cyclotomic third(Rational(1, 3));
  const Cyclotomic half(Rational(1, 2));

  SpetsDatum g;
  g.name = "G4";
  auto add = [&](std::string label, CycPoly deg, std::string family, std::string d1,
                 std::string d4, std::string d6) {
    GenericUnipotent u;
    u.label = std::move(label);
    u.degree = std::move(deg);
    u.family = std::move(family);
    u.series = {{1, std::move(d1)}, {4, std::move(d4)}, {6, std::move(d6)}};
    g.unipotents.push_back(std::move(u));
  };
  const std::string cus = "cuspidal";
  add("rho1,0", scalar(1), "club", "principal", "(1,1)4", "(1,1)6");
  add("rho1,4", scalar(-sqrt3 * sixth) * q_pow(4) * phi3pp * phi(4) * phi6pp, "spade", "principal",
      cus, "(1,1)6");
  add("rho1,8", scalar(sqrt3 * sixth) * q_pow(4) * phi3p * phi(4) * phi6p, "spade", "principal", cus,
      cus);
  add("rho2,1", scalar((sqrt3 + 3) * sixth) * q_pow(1) * phi3p * phi(4) * phi6pp, "heart",
      "principal", cus, "(1,1)6");
  add("rho2,3", scalar((Cyclotomic(3) - sqrt3) * sixth) * q_pow(1) * phi3pp * phi(4) * phi6p, "heart",
      "principal", cus, cus);
  add("rho2,5", scalar(half) * q_pow(4) * phi(2) * phi(2) * phi(6), "spade", "principal", "(1,1)4",
      cus);
  add("rho3,2", q_pow(2) * phi(3) * phi(6), "diamond", "principal", "(1,1)4", cus);
  add("rhoC3,+", scalar(-sqrt3 * third) * q_pow(1) * phi(1) * phi(2) * phi(4), "heart", "C3", cus,
      "(1,1)6");
  add("rhoC3,-", scalar(-sqrt3 * third) * q_pow(4) * phi(1) * phi(2) * phi(4), "spade", "C3", cus,
      "(1,1)6");
  add("cusG4", scalar(-half) * q_pow(4) * phi(1) * phi(1) * phi(3), "spade", cus, "(1,1)4",
      "(1,1)6");

  g.families.names = {"club", "diamond", "heart", "spade"};
  for (const auto& name : g.families.names) {
    std::vector<std::string> block;
    for (const auto& u : g.unipotents) {
      if (u.family == name) block.push_back(u.label);
    }
    g.families.blocks.push_back(std::move(block));
  }

  auto pair = [&](int d, std::string name, std::string parabolic, std::string cuspidal,
                  GroupDescriptor rel, Parameter k) {
    SeriesPair s;
    s.d = d;
    s.name = name;
    s.pair = {std::move(parabolic), std::move(cuspidal), rel, std::move(k)};
    for (const auto& u : g.unipotents) {
      if (u.series.at(d) == name) s.members.push_back(u.label);
    }
    g.series.push_back(std::move(s));
  };
  pair(1, "principal", "1", "1", GroupDescriptor::hardcoded(GroupKind::G4), parameter_of({{1, 0, 0}}));
  pair(1, "C3", "C3", "cusC3", GroupDescriptor::wreath(2, 1), parameter_of({{3, 0}}));
  pair(4, "(1,1)4", "1", "1", GroupDescriptor::wreath(4, 1), parameter_of({{3, 0, 1, 0}}));
  pair(6, "(1,1)6", "1", "1", GroupDescriptor::wreath(6, 1), parameter_of({{2, 0, 0, 1, 0, 1}}));
  return g;
}

}  // namespace

const GenericUnipotent& SpetsDatum::unipotent(const std::string& label) const {
  for (const auto& u : unipotents) {
    if (u.label == label) return u;
  }
  throw DomainError("unknown unipotent label '" + label + "'");
}

std::string SpetsDatum::family_of(const std::string& label) const { return unipotent(label).family; }

const SpetsDatum& g4_datum() {
  static const SpetsDatum datum = build_g4();
  return datum;
}

std::vector<CheckLine> g4_consistency() {
  const SpetsDatum& g = g4_datum();
  const auto table = cached_hardcoded(GroupKind::G4);
  const Parameter ksp = spetsial_parameter(*table);
  std::vector<CheckLine> out;

  for (const auto& u : g.unipotents) {
    bool ok = true;
    for (const auto& c : u.degree.coeffs()) ok = ok && 12 % c.normalized().conductor() == 0;
    out.push_back({"conductor/" + u.label, ok, u.degree.str()});
  }

  for (int d : {4, 6}) {
    for (const auto& u : g.unipotents) {
      const int mult = root_multiplicity(u.degree, Cyclotomic::zeta(d, 1));
      const bool marked = u.series.at(d) == "cuspidal";
      out.push_back({"cuspidal-d" + std::to_string(d) + "/" + u.label, marked == (mult >= 1),
                     "multiplicity " + std::to_string(mult) + (marked ? ", marked cuspidal" : ", in a series")});
    }
  }

  for (size_t f = 0; f < g.families.names.size(); ++f) {
    std::set<int> values;
    for (const auto& label : g.families.blocks[f]) {
      auto [a, A] = a_A_of(g.unipotent(label).degree);
      values.insert(a + A);
    }
    out.push_back({"a+A/" + g.families.names[f], values.size() == 1,
                   "a+A = " + std::to_string(*values.begin())});
  }

  for (const auto& u : g.unipotents) {
    if (u.series.at(1) != "principal") continue;
    const std::string chi = "phi" + u.label.substr(3);
    const Cyclotomic omega = euler_invariant(*table, ksp, table->irr_index(chi));
    auto [a, A] = a_A_of(u.degree);
    const bool ok = omega == Cyclotomic(a + A) * -1 + 12;
    out.push_back({"a+A+omega/" + u.label, ok,
                   "a+A = " + std::to_string(a + A) + ", omega = " + omega.str()});
  }

  for (const auto& s : g.series) {
    int expected = 0;
    if (s.pair.relative.kind == GroupKind::Wreath) {
      expected = cached_wreath(s.pair.relative.d, s.pair.relative.r)->num_irr();
    } else {
      expected = cached_hardcoded(s.pair.relative.kind)->num_irr();
    }
    out.push_back({"series-size/" + s.name, static_cast<int>(s.members.size()) == expected,
                   std::to_string(s.members.size()) + " members, " + std::to_string(expected) +
                       " irreducibles"});
  }

  std::multiset<std::string> labels;
  for (const auto& b : g.families.blocks) labels.insert(b.begin(), b.end());
  std::multiset<std::string> all;
  for (const auto& u : g.unipotents) all.insert(u.label);
  out.push_back({"families-partition", labels == all, std::to_string(g.families.blocks.size()) + " families"});
  return out;
}

std::map<std::string, Cyclotomic> g4_degrees_at_one() {
  std::map<std::string, Cyclotomic> out;
  for (const auto& u : g4_datum().unipotents) out[u.label] = u.degree.evaluate(Cyclotomic(1)).normalized();
  return out;
}

}  // namespace cmspets
