#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cmspets/chartab.hpp"
#include "cmspets/multipoly.hpp"
#include "cmspets/unip.hpp"

namespace cmspets {

/// Root multiset as root -> multiplicity.
using RootMultiset = std::map<Rational, int>;

/// The surface xy = prod_j (z - m k_j).
struct CyclicCMSpace {
  int m = 1;
  std::vector<Rational> k;
  RootMultiset roots;
  RatPoly f() const;
};

/// Throws ShapeError when k does not have m entries.
CyclicCMSpace cyclic_cm(int m, const std::vector<Rational>& k);
CyclicCMSpace cyclic_cm(const Parameter& k);

struct SingularPoint {
  Rational z;
  int multiplicity = 1;
  std::string type;  // "A_(mult-1)"
};

struct SingularityReport {
  RootMultiset roots;
  std::vector<Rational> fixed_points;  // distinct roots, x = y = 0
  std::vector<SingularPoint> singular;
};

SingularityReport singularity_report(const RootMultiset& roots);
inline SingularityReport singularity_report(const CyclicCMSpace& s) { return singularity_report(s.roots); }

/// Polynomial with the given roots; monic unless `lead` is given.
RatPoly from_roots(const RootMultiset& roots, const Rational& lead = 1);
/// Checks that `p` is lead * prod (z - root)^mult by division and degree count.
bool has_root_multiset(const RatPoly& p, const RootMultiset& roots);
RootMultiset shift_roots(const RootMultiset& roots, const Rational& delta);
std::string to_string(const RootMultiset& roots);

/// z -> alpha z + beta.
struct AffineMap {
  Rational alpha = 1;
  Rational beta = 0;
  std::string str() const;
};

/// Affine map carrying the first root multiset onto the second, with multiplicities.
std::optional<AffineMap> iso_up_to_affine(const RootMultiset& a, const RootMultiset& b);
inline std::optional<AffineMap> iso_up_to_affine(const CyclicCMSpace& a, const CyclicCMSpace& b) {
  return iso_up_to_affine(a.roots, b.roots);
}

/// (z^2 - d^2) z^(d-2) shifted by z' = z + d against the cyclic space at k^cox.
std::vector<CheckLine> rank2_fixed_check(GroupKind kind);

struct WeightedPresentation {
  std::vector<std::string> variables;
  std::vector<int> weights;
  std::vector<MultiPoly> equations;
  std::vector<int> equation_weights;
};

/// The ten equations in (x1, x2, y1, y2, a, b, c, e).
const WeightedPresentation& g4_presentation();

struct FixedPointRecord {
  std::string name;
  std::string family;
  std::map<std::string, Rational> coords;
  Rational c() const { return coords.at("c"); }
  Rational e() const { return coords.at("e"); }
};

std::vector<FixedPointRecord> g4_fixed_points();

std::vector<CheckLine> g4_point_checks();
std::vector<CheckLine> g4_homogeneity_checks();

struct MuLocus {
  int d = 4;
  std::vector<std::string> survivors;
  std::vector<int> indices;  // 1-based equation numbers that survive
  std::vector<MultiPoly> equations;
};

/// d in {4, 6}: sets every variable of weight not divisible by d to zero.
MuLocus mu_d_locus(int d);

struct Surface {
  int d = 4;
  std::string x;
  std::string y;
  Rational xy_scale = 1;   // xy_scale * x * y = rhs
  RootMultiset rhs_roots;  // rhs is monic with these roots
  RatPoly c_of_e;          // embedding of c, empty for d = 1
  Parameter cyclic_parameter;
  RatPoly rhs() const { return from_roots(rhs_roots); }
};

/// d in {1, 4, 6}.
Surface g4_surface(int d);
std::vector<CheckLine> g4_surface_checks(int d);
std::vector<CheckLine> g4_series_geometry_crosscheck(int d);
/// The e-coordinate of each fixed point against the Euler invariant at k_sp minus 4.
std::vector<CheckLine> g4_euler_observation();

}  // namespace cmspets
