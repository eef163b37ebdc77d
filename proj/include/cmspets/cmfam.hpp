#pragma once

#include <string>
#include <vector>

#include "cmspets/chartab.hpp"

namespace cmspets {

/// Rationals k_{Omega,j}, one sequence of length e_Omega per hyperplane orbit.
struct Parameter {
  std::vector<std::vector<Rational>> values;

  /// Index j is read modulo e_Omega.
  Rational at(int orbit, int j) const;
  /// "(1,0,0)" per orbit, orbits joined by ";".
  std::string str() const;
  static Parameter parse(const std::string& text);
  friend bool operator==(const Parameter& a, const Parameter& b) { return a.values == b.values; }
};

Parameter parameter_of(std::vector<std::vector<long>> values);
Parameter spetsial_parameter(const CharacterTable& t);
Parameter zero_parameter(const CharacterTable& t);
/// Throws ShapeError unless the sequence lengths match the table's orbits.
void check_parameter_shape(const CharacterTable& t, const Parameter& k);

/// k_{Omega,-j}.
Parameter sharp(const Parameter& k);
/// k' - k constant on each orbit; with `allow_rotation` a cyclic index shift is also allowed.
bool shift_equivalent(const Parameter& a, const Parameter& b, bool allow_rotation);

/// c_k on the reflection class s_H^a of orbit `orbit` (a >= 1).
Cyclotomic c_of_k(const CharacterTable& t, const Parameter& k, int orbit, int a);
/// c_k on a class given by index; throws DomainError for non-reflection classes.
Cyclotomic c_of_k(const CharacterTable& t, const Parameter& k, int class_index);

/// Central character of the Euler element at parameter k on the irreducible `irr`.
Cyclotomic euler_invariant(const CharacterTable& t, const Parameter& k, int irr);

/// Class-sum coordinates of e_chi.
std::vector<Cyclotomic> central_idempotent(const CharacterTable& t, int irr);
/// Class-sum coordinates of the sum of e_chi over `block`.
std::vector<Cyclotomic> family_idempotent(const CharacterTable& t, const std::vector<int>& block);
/// Coordinates of a central element on the e_chi basis, by exact linear solve.
std::vector<Cyclotomic> idempotent_coordinates(const CharacterTable& t,
                                               const std::vector<Cyclotomic>& element);
/// Per chi, sum over reflections s of chi(s)/chi(1). Checked against the linear solve.
std::vector<Cyclotomic> reflection_sum_expansion(const CharacterTable& t);
/// Product in the center, class-sum coordinates, from class multiplication constants.
std::vector<Cyclotomic> center_product(const CharacterTable& t, const std::vector<Cyclotomic>& x,
                                       const std::vector<Cyclotomic>& y);

struct FamilyPartition {
  std::vector<std::string> names;
  std::vector<std::vector<std::string>> blocks;
};

/// Families of the B2, G2 and G4 tables at the spetsial parameter.
FamilyPartition hardcoded_families(GroupKind kind);
/// True when the blocks partition the table's irreducible labels.
bool covers_irreducibles(const CharacterTable& t, const FamilyPartition& f);

struct FiltrationCase {
  std::string core;
  int j = 0;
  int source_dim = 0;
  int target_rank = 0;
  bool pass = true;
  std::string detail;
};

struct FiltrationReport {
  int n = 0;
  int d = 0;
  std::vector<FiltrationCase> cases;
  bool pass() const;
};

/// Image of F_j Z(C S_n) under e_lambda -> e_quo(lambda), one case per (core, j).
/// Requires 1 <= n <= 6, d in {2,3}, d <= n.
FiltrationReport check_filtration_conjecture(int n, int d);

}  // namespace cmspets
