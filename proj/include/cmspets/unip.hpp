#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "cmspets/chartab.hpp"
#include "cmspets/cmfam.hpp"
#include "cmspets/partition.hpp"
#include "cmspets/unipoly.hpp"

namespace cmspets {

/// q^a prod_{k<=n} (q^k - 1) / prod_cells (q^h - 1).
RatPoly generic_degree_A(const Partition& lambda);

/// (valuation, degree). Throws DomainError for the zero polynomial.
template <class T>
std::pair<int, int> a_A_of(const UniPoly<T>& p) {
  if (p.is_zero()) throw DomainError("a and A are undefined for the zero polynomial");
  return {p.valuation(), p.degree()};
}

/// d >= 2: (q - zeta_d)^floor(n/d) divides deg lambda. d = 1: (q - 1)^(n-1) divides it.
bool is_d_cuspidal_A(const Partition& lambda, int d);

struct CuspidalPair {
  std::string parabolic;
  std::string cuspidal;
  GroupDescriptor relative;
  Parameter parameter;
};

struct SeriesBlock {
  Partition core;
  int r = 0;
  std::vector<Partition> members;
  std::vector<MultiPartition> labels;  // labels[i] is the relative label of members[i]
  CuspidalPair pair;
};

/// One block per d-core of a partition of n.
std::vector<SeriesBlock> d_series_A(int n, int d);

/// Ennola partner: the order of -zeta_d.
int ennola_dual(int d);

enum class ClassicalType { B, Dplus, Dminus };

struct ClassicalRow {
  int r = 0;
  GroupDescriptor relative;
  std::string relative_name;  // "W_3", "W'_4", ...
  std::string parameter_name; // "k[5]", "k_sp", ...
  Parameter parameter;
  friend bool operator==(const ClassicalRow& a, const ClassicalRow& b) {
    return a.r == b.r && a.relative_name == b.relative_name &&
           a.parameter_name == b.parameter_name && a.parameter == b.parameter;
  }
};

struct ClassicalComparison {
  ClassicalType type = ClassicalType::B;
  int n = 0;
  std::vector<ClassicalRow> hc_side;
  std::vector<ClassicalRow> cm_side;
  std::vector<std::string> diff;
};

/// n >= 2 for B, n >= 4 for D.
ClassicalComparison classical_hc(ClassicalType type, int n);
std::string to_string(ClassicalType type);

struct Symbol {
  std::vector<int> top;
  std::vector<int> bottom;
  int defect() const { return static_cast<int>(top.size()) - static_cast<int>(bottom.size()); }
  std::string str() const;
};

struct SymbolCheck {
  Symbol cuspidal;
  Symbol principal;
  bool same_entries = false;
};

/// Cuspidal symbol (1..2r+1 | -) and principal series symbol (r+1..2r+1 | 1..r).
SymbolCheck symbol_check(int r);

struct GenericUnipotent {
  std::string label;
  CycPoly degree;
  std::string family;
  std::map<int, std::string> series;  // d -> series name, "cuspidal" if d-cuspidal
};

struct SeriesPair {
  int d = 1;
  std::string name;
  CuspidalPair pair;
  std::vector<std::string> members;
};

struct SpetsDatum {
  std::string name;
  std::vector<GenericUnipotent> unipotents;
  FamilyPartition families;
  std::vector<SeriesPair> series;

  const GenericUnipotent& unipotent(const std::string& label) const;
  std::string family_of(const std::string& label) const;
};

const SpetsDatum& g4_datum();

struct CheckLine {
  std::string id;
  bool pass = true;
  std::string detail;
};

/// Cuspidality vs root multiplicities, a+A per family, a+A+omega = 12, series sizes.
std::vector<CheckLine> g4_consistency();

/// Each degree evaluated at q = 1.
std::map<std::string, Cyclotomic> g4_degrees_at_one();

/// (Coxeter number, k^cox over mu_d) for B2 and G2.
std::pair<int, Parameter> rank2_datum(GroupKind kind);

struct MichelCase {
  Partition lambda;
  Integer lhs;
  Integer rhs;
  bool pass() const { return lhs == rhs; }
};

/// |chi_lambda(w_d)|^2 against the multitableau count; d | n, n <= 10.
std::vector<MichelCase> michel_identity_A(int n, int d);

}  // namespace cmspets
