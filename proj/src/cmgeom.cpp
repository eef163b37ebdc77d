#include "cmspets/cmgeom.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace cmspets {

RatPoly CyclicCMSpace::f() const { return from_roots(roots); }

CyclicCMSpace cyclic_cm(int m, const std::vector<Rational>& k) {
  if (m < 1) throw DomainError("cyclic_cm: m must be positive");
  if (static_cast<int>(k.size()) != m) {
    throw ShapeError("cyclic_cm: expected " + std::to_string(m) + " parameters, got " +
                     std::to_string(k.size()));
  }
  CyclicCMSpace s;
  s.m = m;
  s.k = k;
  for (const auto& kj : k) s.roots[Rational(kj * m)] += 1;
  return s;
}

CyclicCMSpace cyclic_cm(const Parameter& k) {
  if (k.values.size() != 1) throw ShapeError("cyclic_cm: a single orbit is expected");
  return cyclic_cm(static_cast<int>(k.values[0].size()), k.values[0]);
}

SingularityReport singularity_report(const RootMultiset& roots) {
  SingularityReport r;
  r.roots = roots;
  for (const auto& [z, mult] : roots) {
    r.fixed_points.push_back(z);
    if (mult >= 2) r.singular.push_back({z, mult, "A_" + std::to_string(mult - 1)});
  }
  return r;
}

RatPoly from_roots(const RootMultiset& roots, const Rational& lead) {
  RatPoly p(lead);
  for (const auto& [z, mult] : roots) {
    for (int i = 0; i < mult; ++i) p *= RatPoly::linear(z);
  }
  return p;
}

bool has_root_multiset(const RatPoly& p, const RootMultiset& roots) {
  if (p.is_zero()) return false;
  int total = 0;
  for (const auto& [z, mult] : roots) {
    if (root_multiplicity(p, Cyclotomic(z)) != mult) return false;
    total += mult;
  }
  return total == p.degree();
}

RootMultiset shift_roots(const RootMultiset& roots, const Rational& delta) {
  RootMultiset out;
  for (const auto& [z, mult] : roots) out[Rational(z + delta)] += mult;
  return out;
}

std::string to_string(const RootMultiset& roots) {
  std::ostringstream out;
  out << "{";
  bool first = true;
  for (const auto& [z, mult] : roots) {
    for (int i = 0; i < mult; ++i) {
      if (!first) out << ", ";
      first = false;
      out << to_string(z);
    }
  }
  out << "}";
  return out.str();
}

std::string AffineMap::str() const {
  std::string s = alpha == 1 ? "z" : (alpha == -1 ? "-z" : to_string(alpha) + "*z");
  if (sgn(beta) > 0) s += " + " + to_string(beta);
  if (sgn(beta) < 0) s += " - " + to_string(Rational(-beta));
  return s;
}

namespace {

RootMultiset apply(const AffineMap& m, const RootMultiset& roots) {
  RootMultiset out;
  for (const auto& [z, mult] : roots) out[Rational(m.alpha * z + m.beta)] += mult;
  return out;
}

}  // namespace

std::optional<AffineMap> iso_up_to_affine(const RootMultiset& a, const RootMultiset& b) {
  int na = 0;
  int nb = 0;
  for (const auto& [z, m] : a) na += m;
  for (const auto& [z, m] : b) nb += m;
  if (na != nb || a.size() != b.size()) return std::nullopt;
  if (a.empty()) return AffineMap{};
  if (a == b) return AffineMap{};
  if (a.size() == 1) {
    if (a.begin()->second != b.begin()->second) return std::nullopt;
    return AffineMap{1, Rational(b.begin()->first - a.begin()->first)};
  }
  // Two distinct roots of `a` determine the map once their images are chosen.
  const Rational u = a.begin()->first;
  const Rational v = std::next(a.begin())->first;
  std::vector<AffineMap> candidates;
  for (const auto& [u2, mu] : b) {
    if (mu != a.begin()->second) continue;
    for (const auto& [v2, mv] : b) {
      if (v2 == u2 || mv != std::next(a.begin())->second) continue;
      const Rational alpha = (u2 - v2) / (u - v);
      candidates.push_back({alpha, Rational(u2 - alpha * u)});
    }
  }
  // Translations before reflections and rescalings.
  std::stable_sort(candidates.begin(), candidates.end(), [](const AffineMap& x, const AffineMap& y) {
    return (x.alpha != 1) < (y.alpha != 1);
  });
  for (const auto& c : candidates) {
    if (apply(c, a) == b) return c;
  }
  return std::nullopt;
}

std::vector<CheckLine> rank2_fixed_check(GroupKind kind) {
  const auto [d, kcox] = rank2_datum(kind);
  const std::string name = to_string(kind);
  std::vector<CheckLine> out;
  // (z^2 - d^2) z^(d-2) in z, then z = z' - d.
  const RatPoly f = (RatPoly::monomial(1, 2) - RatPoly(Rational(d * d))) * RatPoly::monomial(1, d - 2);
  const RatPoly shifted = f.shifted(Rational(-d));
  const CyclicCMSpace space = cyclic_cm(kcox);
  out.push_back({name + "/polynomial", shifted == space.f(),
                 "f(z'-" + std::to_string(d) + ") = " + shifted.str("z") + ", cyclic f = " +
                     space.f().str("z")});
  out.push_back({name + "/roots", has_root_multiset(shifted, space.roots), to_string(space.roots)});
  const SingularityReport sr = singularity_report(space);
  const bool profile = sr.singular.size() == 1 && sr.singular[0].z == d &&
                       sr.singular[0].multiplicity == d - 2;
  out.push_back({name + "/singularities", profile,
                 sr.singular.empty() ? "smooth"
                                     : sr.singular[0].type + " at z = " + to_string(sr.singular[0].z)});
  return out;
}

const WeightedPresentation& g4_presentation() {
  static const WeightedPresentation p = [] {
    WeightedPresentation w;
    w.variables = {"x1", "x2", "y1", "y2", "a", "b", "c", "e"};
    w.weights = {4, 6, -4, -6, 2, -2, 0, 0};
    const std::vector<std::string> text = {
        "a*b + 12*c*e + 2*x1*y1 - 15*e^4 + 234*e^2 + 192*e",
        "3*a*y1*e + 4*b*c - 9*b*e^3 + 126*b*e + 2*x1*y2",
        "3*a^2*e - 2*b*x2 + 8*c*x1 - 9*x1*e^3 + 108*x1*e",
        "4*a*c - 9*a*e^3 + 126*a*e + 3*b*x1*e + 2*x2*y1",
        "2*a*y2 - 3*b^2*e - 8*c*y1 + 9*y1*e^3 - 108*y1*e",
        "-a^3 - 3*a*x1*e^2 + 48*a*x1 + 2*b*x1^2 - 8*c*x2 + 10*x2*e^3 - 156*x2*e - 128*x2",
        "2*a*y1^2 - b^3 - 3*b*y1*e^2 + 48*b*y1 - 8*c*y2 + 10*y2*e^3 - 156*y2*e - 128*y2",
        "16*c^2 + 720*c*e + 9*x1*y1*e^2 + 2*x2*y2 - 27*e^6 + 864*e^3 + 6804*e^2",
        "-2*a*y1^2 + b^3 + 3*b*y1*e^2 - 48*b*y1 + 8*c*y2 - 10*y2*e^3 + 156*y2*e + 128*y2",
        "5*a^2*y1 + 444*a*b + 5*b^2*x1 + 280*c*e^3 + 4848*c*e - 1280*c + 60*x1*y1*e^2 + "
        "648*x1*y1 + 10*x2*y2 - 360*e^6 + 7200*e^3 + 88776*e^2 + 44928*e",
    };
    for (const auto& t : text) w.equations.push_back(MultiPoly::parse(t, w.variables));
    w.equation_weights = {0, -2, 4, 2, -4, 6, -6, 0, -6, 0};
    return w;
  }();
  return p;
}

std::vector<FixedPointRecord> g4_fixed_points() {
  auto point = [](std::string name, std::string family, long c, long e) {
    FixedPointRecord r;
    r.name = std::move(name);
    r.family = std::move(family);
    for (const auto& v : g4_presentation().variables) r.coords[v] = 0;
    r.coords["c"] = c;
    r.coords["e"] = e;
    return r;
  };
  return {point("z_club", "club", 468, 8), point("z_diamond", "diamond", 0, 0),
          point("z_heart", "heart", -45, 2), point("z_spade", "spade", -18, -4)};
}

std::vector<CheckLine> g4_point_checks() {
  const auto& p = g4_presentation();
  std::vector<CheckLine> out;
  for (const auto& pt : g4_fixed_points()) {
    std::vector<int> failing;
    for (size_t i = 0; i < p.equations.size(); ++i) {
      if (!is_zero(p.equations[i].evaluate(pt.coords))) failing.push_back(static_cast<int>(i) + 1);
    }
    std::string detail = "(c, e) = (" + to_string(pt.c()) + ", " + to_string(pt.e()) + ")";
    if (!failing.empty()) {
      detail += ", nonzero equations:";
      for (int i : failing) detail += " " + std::to_string(i);
    }
    out.push_back({"point/" + pt.name, failing.empty(), detail});
  }
  // The four points are the only solutions with vanishing nonzero-weight coordinates.
  MultiPoly e1 = p.equations[0];
  MultiPoly e8 = p.equations[7];
  for (const auto& v : {"x1", "x2", "y1", "y2", "a", "b"}) {
    e1 = e1.substitute(v, Rational(0));
    e8 = e8.substitute(v, Rational(0));
  }
  std::set<std::pair<Rational, Rational>> found;
  const auto pts = g4_fixed_points();
  for (const auto& pt : pts) found.insert({pt.c(), pt.e()});
  // Eq 1 restricted is 12ce = poly(e); at e = 0 eq 8 gives 16c^2 = 0.
  bool exhaustive = true;
  std::string detail;
  {
    const RatPoly rhs(std::vector<Rational>{0, 192, 234, 0, -15});  // 12ce + rhs = 0
    // Substituting c = -rhs/(12e) into eq 8 times e^2 gives a polynomial in e.
    const RatPoly c_num = -rhs.divexact(RatPoly::monomial(1, 1));  // 12c = c_num
    const RatPoly e = RatPoly::monomial(1, 1);
    RatPoly eq8 = c_num * c_num * RatPoly(Rational(16, 144)) + c_num * e * RatPoly(Rational(720, 12)) +
                  RatPoly(std::vector<Rational>{0, 0, 6804, 864, 0, 0, -27});
    std::set<Rational> roots;
    RatPoly rest = eq8;
    for (long cand = -20; cand <= 20; ++cand) {
      if (cand == 0) continue;
      const int m = root_multiplicity(eq8, Cyclotomic(cand));
      if (m > 0) roots.insert(cand);
      for (int i = 0; i < m; ++i) rest = rest.divexact(RatPoly::linear(cand));
    }
    // The remaining factor must have no nonzero rational root; it is a pure power of e.
    exhaustive = rest.degree() == rest.valuation();
    for (const auto& r : roots) {
      const Rational c = Rational(c_num.evaluate(r) / 12);
      exhaustive = exhaustive && found.count({c, r}) == 1;
    }
    exhaustive = exhaustive && roots.size() + 1 == pts.size();
    detail = "nonzero e roots:";
    for (const auto& r : roots) detail += " " + to_string(r);
  }
  out.push_back({"point/exhaustive", exhaustive, detail});
  return out;
}

std::vector<CheckLine> g4_homogeneity_checks() {
  const auto& p = g4_presentation();
  std::vector<CheckLine> out;
  for (size_t i = 0; i < p.equations.size(); ++i) {
    const auto w = p.equations[i].weighted_degree(p.weights);
    const bool ok = w && *w == p.equation_weights[i];
    out.push_back({"homogeneity/eq" + std::to_string(i + 1), ok,
                   w ? "weight " + std::to_string(*w) : std::string("not homogeneous")});
  }
  out.push_back({"homogeneity/eq9-negates-eq7", p.equations[8] == -p.equations[6], ""});
  return out;
}

MuLocus mu_d_locus(int d) {
  if (d != 4 && d != 6) throw DomainError("mu_d_locus: d must be 4 or 6");
  const auto& p = g4_presentation();
  MuLocus m;
  m.d = d;
  std::vector<std::string> dropped;
  for (size_t i = 0; i < p.variables.size(); ++i) {
    (p.weights[i] % d == 0 ? m.survivors : dropped).push_back(p.variables[i]);
  }
  for (size_t i = 0; i < p.equations.size(); ++i) {
    MultiPoly q = p.equations[i];
    for (const auto& v : dropped) q = q.substitute(v, Rational(0));
    if (q.is_zero()) continue;
    m.indices.push_back(static_cast<int>(i) + 1);
    m.equations.push_back(std::move(q));
  }
  return m;
}

Surface g4_surface(int d) {
  Surface s;
  s.d = d;
  const RatPoly e = RatPoly::monomial(1, 1);
  switch (d) {
    case 1:
      s.x = "x1";
      s.y = "y1";
      s.rhs_roots = {{2, 1}, {-4, 1}};
      s.cyclic_parameter = parameter_of({{3, 0}});
      break;
    case 4:
      s.x = "x1";
      s.y = "y1";
      s.xy_scale = Rational(4, 3);
      s.rhs_roots = {{0, 1}, {8, 1}, {-4, 2}};
      s.c_of_e = RatPoly(std::vector<Rational>{0, -108, 0, 9}) * RatPoly(Rational(1, 8));
      s.cyclic_parameter = parameter_of({{3, 0, 1, 0}});
      break;
    case 6:
      s.x = "x2";
      s.y = "y2";
      s.rhs_roots = {{8, 1}, {2, 2}, {-4, 3}};
      s.c_of_e = RatPoly(std::vector<Rational>{-64, -78, 0, 5}) * RatPoly(Rational(1, 4));
      s.cyclic_parameter = parameter_of({{2, 0, 0, 1, 0, 1}});
      break;
    default:
      throw DomainError("g4_surface: d must be 1, 4 or 6");
  }
  return s;
}

namespace {

bool on_surface(const Surface& s, const FixedPointRecord& pt) {
  if (!s.c_of_e.is_zero() && s.c_of_e.evaluate(pt.e()) != pt.c()) return false;
  return is_zero(s.rhs().evaluate(pt.e()));
}

}  // namespace

std::vector<CheckLine> g4_surface_checks(int d) {
  const Surface s = g4_surface(d);
  const std::string tag = "d" + std::to_string(d);
  std::vector<CheckLine> out;

  if (d != 1) {
    // Embedding: zero the other coordinates, put c = c(e), reduce xy; every equation must vanish.
    const MuLocus locus = mu_d_locus(d);
    const auto& vars = g4_presentation().variables;
    const MultiPoly c_poly = MultiPoly::from_uni(vars, "e", s.c_of_e);
    const MultiPoly product = MultiPoly::from_uni(vars, "e", s.rhs()) * Rational(1 / s.xy_scale);
    std::vector<int> failing;
    for (size_t i = 0; i < locus.equations.size(); ++i) {
      const MultiPoly r = locus.equations[i].substitute("c", c_poly).reduce_product(s.x, s.y, product);
      if (!r.is_zero()) failing.push_back(locus.indices[i]);
    }
    std::string detail = std::to_string(locus.equations.size()) + " equations on the locus";
    for (int i : failing) detail += ", eq" + std::to_string(i) + " nonzero";
    out.push_back({"surface-" + tag + "/embedding", failing.empty(), detail});
  }

  const SingularityReport sr = singularity_report(s.rhs_roots);
  std::string sing;
  for (const auto& p : sr.singular) sing += (sing.empty() ? "" : ", ") + p.type + " at e = " + to_string(p.z);
  std::set<Rational> expected_sing;
  if (d == 4) expected_sing = {-4};
  if (d == 6) expected_sing = {2, -4};
  std::set<Rational> got_sing;
  for (const auto& p : sr.singular) got_sing.insert(p.z);
  out.push_back({"surface-" + tag + "/singular", got_sing == expected_sing && has_root_multiset(s.rhs(), s.rhs_roots),
                 sing.empty() ? "smooth" : sing});

  // The cyclic space at the series parameter, shifted by e = z - 4.
  const CyclicCMSpace cyc = cyclic_cm(s.cyclic_parameter);
  const RootMultiset moved = shift_roots(cyc.roots, -4);
  const auto iso = iso_up_to_affine(cyc.roots, s.rhs_roots);
  out.push_back({"surface-" + tag + "/cyclic", moved == s.rhs_roots && iso.has_value(),
                 "k = " + s.cyclic_parameter.str() + ", roots " + to_string(cyc.roots) + " -> " +
                     to_string(moved) + (iso ? ", map " + iso->str() : ", no affine map")});

  for (const auto& pt : g4_fixed_points()) {
    const bool on = on_surface(s, pt);
    out.push_back({"surface-" + tag + "/" + pt.name, true, on ? "on surface" : "off surface"});
  }
  return out;
}

std::vector<CheckLine> g4_series_geometry_crosscheck(int d) {
  if (d != 4 && d != 6) throw DomainError("series-geometry crosscheck needs d = 4 or 6");
  const SpetsDatum& g = g4_datum();
  const Surface s = g4_surface(d);
  const std::string tag = "d" + std::to_string(d);
  const std::string series = "(1,1)" + std::to_string(d);

  std::set<std::string> series_families;
  std::set<std::string> cuspidal_families;
  for (const auto& u : g.unipotents) {
    if (u.series.at(d) == series) series_families.insert(u.family);
    if (u.series.at(d) == "cuspidal") cuspidal_families.insert(u.family);
  }
  std::set<std::string> on;
  std::set<std::string> off;
  for (const auto& pt : g4_fixed_points()) (on_surface(s, pt) ? on : off).insert(pt.family);

  auto join = [](const std::set<std::string>& xs) {
    std::string r;
    for (const auto& x : xs) r += (r.empty() ? "" : ",") + x;
    return "{" + r + "}";
  };
  std::vector<CheckLine> out;
  out.push_back({"series-geometry-" + tag + "/on-surface", on == series_families,
                 "surface " + join(on) + ", series " + join(series_families)});
  // Isolated points: only d-cuspidal rows in their family.
  bool isolated_ok = off.size() == 1;
  for (const auto& f : off) {
    isolated_ok = isolated_ok && series_families.count(f) == 0 && cuspidal_families.count(f) == 1;
    const auto& mu = mu_d_locus(d);
    for (const auto& pt : g4_fixed_points()) {
      if (pt.family != f) continue;
      for (const auto& eq : mu.equations) isolated_ok = isolated_ok && is_zero(eq.evaluate(pt.coords));
    }
  }
  out.push_back({"series-geometry-" + tag + "/isolated", isolated_ok, join(off)});
  out.push_back({"series-geometry-" + tag + "/cuspidal-families", true, join(cuspidal_families)});
  return out;
}

std::vector<CheckLine> g4_euler_observation() {
  const SpetsDatum& g = g4_datum();
  const auto table = cached_hardcoded(GroupKind::G4);
  const Parameter ksp = spetsial_parameter(*table);
  std::vector<CheckLine> out;
  for (const auto& pt : g4_fixed_points()) {
    std::set<std::string> omegas;
    bool ok = true;
    for (const auto& u : g.unipotents) {
      if (u.family != pt.family || u.series.at(1) != "principal") continue;
      const Cyclotomic omega = euler_invariant(*table, ksp, table->irr_index("phi" + u.label.substr(3)));
      omegas.insert(omega.normalized().str());
      ok = ok && omega == Cyclotomic(pt.e() + 4);
    }
    std::string detail = "e = " + to_string(pt.e()) + ", omega =";
    for (const auto& o : omegas) detail += " " + o;
    out.push_back({"euler/" + pt.name, ok && !omegas.empty(), detail});
  }
  return out;
}

}  // namespace cmspets
