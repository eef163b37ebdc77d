#include "cmspets/cmfam.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace cmspets {

Rational Parameter::at(int orbit, int j) const {
  const auto& seq = values.at(orbit);
  const int e = static_cast<int>(seq.size());
  return seq[((j % e) + e) % e];
}

std::string Parameter::str() const {
  std::string out;
  for (size_t o = 0; o < values.size(); ++o) {
    if (o) out += ";";
    out += "(";
    for (size_t j = 0; j < values[o].size(); ++j) {
      if (j) out += ",";
      out += to_string(values[o][j]);
    }
    out += ")";
  }
  return out;
}

Parameter Parameter::parse(const std::string& text) {
  Parameter k;
  std::stringstream orbits(text);
  std::string orbit;
  while (std::getline(orbits, orbit, ';')) {
    orbit.erase(std::remove_if(orbit.begin(), orbit.end(),
                               [](char c) { return c == '(' || c == ')' || c == ' '; }),
                orbit.end());
    std::vector<Rational> seq;
    std::stringstream items(orbit);
    std::string item;
    while (std::getline(items, item, ',')) seq.push_back(parse_rational(item));
    if (seq.empty()) throw std::invalid_argument("empty parameter sequence in '" + text + "'");
    k.values.push_back(std::move(seq));
  }
  return k;
}

Parameter parameter_of(std::vector<std::vector<long>> values) {
  Parameter k;
  for (const auto& seq : values) {
    std::vector<Rational> r;
    for (long v : seq) r.emplace_back(v);
    k.values.push_back(std::move(r));
  }
  return k;
}

Parameter spetsial_parameter(const CharacterTable& t) {
  Parameter k;
  for (const auto& o : t.orbits) {
    std::vector<Rational> seq(o.e, 0);
    seq[0] = 1;
    k.values.push_back(std::move(seq));
  }
  return k;
}

Parameter zero_parameter(const CharacterTable& t) {
  Parameter k;
  for (const auto& o : t.orbits) k.values.emplace_back(o.e, Rational(0));
  return k;
}

void check_parameter_shape(const CharacterTable& t, const Parameter& k) {
  if (k.values.size() != t.orbits.size()) throw ShapeError("parameter has the wrong number of orbits");
  for (size_t o = 0; o < t.orbits.size(); ++o) {
    if (static_cast<int>(k.values[o].size()) != t.orbits[o].e) {
      throw ShapeError("parameter length differs from e for orbit " + t.orbits[o].name);
    }
  }
}

Parameter sharp(const Parameter& k) {
  Parameter s = k;
  for (size_t o = 0; o < k.values.size(); ++o) {
    const int e = static_cast<int>(k.values[o].size());
    for (int j = 0; j < e; ++j) s.values[o][j] = k.at(static_cast<int>(o), -j);
  }
  return s;
}

namespace {

bool differs_by_constant(const std::vector<Rational>& a, const std::vector<Rational>& b, int rot) {
  const int e = static_cast<int>(a.size());
  const Rational c = b[rot % e] - a[0];
  for (int j = 0; j < e; ++j) {
    if (b[(j + rot) % e] - a[j] != c) return false;
  }
  return true;
}

}  // namespace

bool shift_equivalent(const Parameter& a, const Parameter& b, bool allow_rotation) {
  if (a.values.size() != b.values.size()) throw ShapeError("parameters over different orbit sets");
  for (size_t o = 0; o < a.values.size(); ++o) {
    const auto& x = a.values[o];
    const auto& y = b.values[o];
    if (x.size() != y.size()) throw ShapeError("parameters over different orbit sets");
    const int e = static_cast<int>(x.size());
    bool ok = false;
    for (int rot = 0; rot < (allow_rotation ? e : 1) && !ok; ++rot) ok = differs_by_constant(x, y, rot);
    if (!ok) return false;
  }
  return true;
}

Cyclotomic c_of_k(const CharacterTable& t, const Parameter& k, int orbit, int a) {
  check_parameter_shape(t, k);
  const int e = t.orbits.at(orbit).e;
  if (a % e == 0) throw DomainError("c_k is only defined on nontrivial reflections");
  // Coefficient of s^a in sum_j e (k_j - k_{j+1}) eps_j, divided by det(s^a) - 1.
  Cyclotomic num = 0;
  for (int j = 0; j < e; ++j) {
    num += Cyclotomic(Rational(k.at(orbit, j) - k.at(orbit, j + 1))) * Cyclotomic::zeta(e, static_cast<long>(a) * j);
  }
  return num / (Cyclotomic::zeta(e, a) - 1);
}

Cyclotomic c_of_k(const CharacterTable& t, const Parameter& k, int class_index) {
  for (size_t o = 0; o < t.orbits.size(); ++o) {
    const auto& cls = t.orbits[o].classes;
    for (size_t a = 0; a < cls.size(); ++a) {
      if (cls[a] == class_index) return c_of_k(t, k, static_cast<int>(o), static_cast<int>(a) + 1);
    }
  }
  throw DomainError("class " + t.class_labels.at(class_index) + " is not a reflection class");
}

Cyclotomic euler_invariant(const CharacterTable& t, const Parameter& k, int irr) {
  if (irr < 0 || irr >= t.num_irr()) throw DomainError("unknown irreducible index");
  check_parameter_shape(t, k);
  const Cyclotomic deg = t.values[irr][t.identity_class];
  Cyclotomic total = 0;
  for (size_t o = 0; o < t.orbits.size(); ++o) {
    const auto& orb = t.orbits[o];
    Cyclotomic inner = 0;
    for (int j = 0; j < orb.e; ++j) {
      const Rational kj = k.at(static_cast<int>(o), j);
      if (sgn(kj) == 0) continue;
      Cyclotomic s = 1;  // a = 0 term
      for (int a = 1; a < orb.e; ++a) {
        s += Cyclotomic::zeta(orb.e, static_cast<long>(a) * j) * t.values[irr][orb.classes[a - 1]] / deg;
      }
      inner += Cyclotomic(kj) * s;
    }
    total += Cyclotomic(orb.size) * inner;
  }
  return total.normalized();
}

std::vector<Cyclotomic> central_idempotent(const CharacterTable& t, int irr) {
  const Cyclotomic deg = t.values[irr][t.identity_class];
  const Cyclotomic order(Rational(t.group.order));
  std::vector<Cyclotomic> out;
  for (int c = 0; c < t.num_classes(); ++c) {
    out.push_back(deg * t.values[irr][t.inverse_class[c]] / order);
  }
  return out;
}

std::vector<Cyclotomic> family_idempotent(const CharacterTable& t, const std::vector<int>& block) {
  std::vector<Cyclotomic> out(t.num_classes(), Cyclotomic(0));
  for (int irr : block) {
    if (irr < 0 || irr >= t.num_irr()) throw DomainError("family member outside the table");
    const auto e = central_idempotent(t, irr);
    for (int c = 0; c < t.num_classes(); ++c) out[c] += e[c];
  }
  for (auto& x : out) x = x.normalized();
  return out;
}

std::vector<Cyclotomic> idempotent_coordinates(const CharacterTable& t,
                                               const std::vector<Cyclotomic>& element) {
  const int n = t.num_irr();
  const int nc = t.num_classes();
  // Columns e_chi, right hand side `element`.
  Matrix<Cyclotomic> aug(nc, std::vector<Cyclotomic>(n + 1, Cyclotomic(0)));
  for (int i = 0; i < n; ++i) {
    const auto e = central_idempotent(t, i);
    for (int c = 0; c < nc; ++c) aug[c][i] = e[c];
  }
  for (int c = 0; c < nc; ++c) aug[c][n] = element.at(c);
  const auto pivots = rref(aug);
  if (static_cast<int>(pivots.size()) != n) throw std::logic_error("idempotents are not a basis");
  std::vector<Cyclotomic> out(n);
  for (int i = 0; i < n; ++i) out[pivots[i]] = aug[i][n].normalized();
  return out;
}

std::vector<Cyclotomic> reflection_sum_expansion(const CharacterTable& t) {
  std::vector<Cyclotomic> z(t.num_classes(), Cyclotomic(0));
  for (int c = 0; c < t.num_classes(); ++c) {
    if (t.cod[c] == 1) z[c] = 1;
  }
  std::vector<Cyclotomic> out;
  for (int i = 0; i < t.num_irr(); ++i) {
    Cyclotomic s = 0;
    for (int c = 0; c < t.num_classes(); ++c) {
      if (t.cod[c] == 1) s += Cyclotomic(Rational(t.class_sizes[c])) * t.values[i][c];
    }
    out.push_back((s / t.values[i][t.identity_class]).normalized());
  }
  const auto solved = idempotent_coordinates(t, z);
  for (int i = 0; i < t.num_irr(); ++i) {
    if (!(solved[i] == out[i])) throw std::logic_error("reflection sum expansion disagrees with the linear solve");
  }
  return out;
}

std::vector<Cyclotomic> center_product(const CharacterTable& t, const std::vector<Cyclotomic>& x,
                                       const std::vector<Cyclotomic>& y) {
  const int nc = t.num_classes();
  // Multiply on the idempotent basis, where the product is pointwise.
  const auto cx = idempotent_coordinates(t, x);
  const auto cy = idempotent_coordinates(t, y);
  std::vector<Cyclotomic> out(nc, Cyclotomic(0));
  for (int i = 0; i < t.num_irr(); ++i) {
    const Cyclotomic f = cx[i] * cy[i];
    if (f.is_zero()) continue;
    const auto e = central_idempotent(t, i);
    for (int c = 0; c < nc; ++c) out[c] += f * e[c];
  }
  for (auto& v : out) v = v.normalized();
  return out;
}

FamilyPartition hardcoded_families(GroupKind kind) {
  switch (kind) {
    case GroupKind::B2:
      return {{"trivial", "sign", "V"}, {{"1"}, {"sgn"}, {"V", "eps_s", "eps_t"}}};
    case GroupKind::G2:
      return {{"trivial", "sign", "V"}, {{"1"}, {"sgn"}, {"V", "V2", "eps_s", "eps_t"}}};
    case GroupKind::G4:
      return {{"club", "diamond", "heart", "spade"},
              {{"phi1,0"}, {"phi3,2"}, {"phi2,1", "phi2,3"}, {"phi1,4", "phi1,8", "phi2,5"}}};
    default: throw DomainError("families are tabulated for B2, G2 and G4 only");
  }
}

bool covers_irreducibles(const CharacterTable& t, const FamilyPartition& f) {
  std::multiset<std::string> seen;
  for (const auto& b : f.blocks) seen.insert(b.begin(), b.end());
  std::multiset<std::string> all(t.irr_labels.begin(), t.irr_labels.end());
  return seen == all;
}

bool FiltrationReport::pass() const {
  return std::all_of(cases.begin(), cases.end(), [](const FiltrationCase& c) { return c.pass; });
}

FiltrationReport check_filtration_conjecture(int n, int d) {
  if (n < 1 || n > 6 || (d != 2 && d != 3) || d > n) {
    throw DomainError("filtration checks need 1 <= n <= 6, d in {2,3} and d <= n");
  }
  FiltrationReport report;
  report.n = n;
  report.d = d;
  const auto src = cached_symmetric(n);
  const int nc = src->num_classes();

  // Source: F_j of the center, i.e. its intersection with the span of class sums of cod <= j.
  Matrix<Cyclotomic> e_rows;
  for (int i = 0; i < src->num_irr(); ++i) e_rows.push_back(central_idempotent(*src, i));

  std::map<Partition, std::vector<int>> by_core;
  std::vector<CoreQuotient> cq;
  for (int i = 0; i < src->num_irr(); ++i) {
    cq.push_back(core_quotient(src->irr_partitions[i], d));
    by_core[cq.back().core].push_back(i);
  }

  for (const auto& [core, members] : by_core) {
    const int r = (n - core.size()) / d;
    std::shared_ptr<const CharacterTable> tgt;
    if (r >= 1) tgt = cached_wreath(d, r);
    // Target coordinates of e_psi for each source irreducible with this core.
    std::map<int, std::vector<Cyclotomic>> image_of;
    for (int i : members) {
      if (tgt) {
        image_of[i] = central_idempotent(*tgt, tgt->irr_index(cq[i].quotient.str()));
      } else {
        image_of[i] = {Cyclotomic(1)};
      }
    }
    for (int j = 0; j <= n; ++j) {
      FiltrationCase fc;
      fc.core = core.str();
      fc.j = j;
      fc.target_rank = r;
      Matrix<Cyclotomic> cls_rows;
      for (int c = 0; c < nc; ++c) {
        if (src->cod[c] > j) continue;
        std::vector<Cyclotomic> v(nc, Cyclotomic(0));
        v[c] = 1;
        cls_rows.push_back(std::move(v));
      }
      const auto basis = intersect_spans(e_rows, cls_rows, nc);
      fc.source_dim = static_cast<int>(basis.size());
      for (const auto& x : basis) {
        const auto coords = idempotent_coordinates(*src, x);
        std::vector<Cyclotomic> img(tgt ? tgt->num_classes() : 1, Cyclotomic(0));
        for (int i : members) {
          if (coords[i].is_zero()) continue;
          for (size_t c = 0; c < img.size(); ++c) img[c] += coords[i] * image_of[i][c];
        }
        const int deg = tgt ? cod_filtration_degree(*tgt, img) : 0;
        if (deg > j) {
          fc.pass = false;
          fc.detail = "image has filtration degree " + std::to_string(deg);
          break;
        }
      }
      report.cases.push_back(fc);
    }
  }
  return report;
}

}  // namespace cmspets
