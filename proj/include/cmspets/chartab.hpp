#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cmspets/cyclotomic.hpp"
#include "cmspets/linalg.hpp"
#include "cmspets/partition.hpp"

namespace cmspets {

enum class GroupKind { Symmetric, Wreath, B2, G2, G4, TypeD };

struct GroupDescriptor {
  GroupKind kind = GroupKind::Symmetric;
  int n = 0;  // Symmetric(n)
  int d = 1;  // Wreath(d, r)
  int r = 0;
  Integer order = 1;
  int rank = 0;

  static GroupDescriptor symmetric(int n);
  static GroupDescriptor wreath(int d, int r);
  static GroupDescriptor hardcoded(GroupKind kind);
  /// G(2,2,n), only used as a relative group label.
  static GroupDescriptor type_d(int n);
  /// "S4", "G(2,1,3)", "G(2,2,4)", "B2", "G2", "G4".
  std::string name() const;
  friend bool operator==(const GroupDescriptor& a, const GroupDescriptor& b) {
    return a.kind == b.kind && a.n == b.n && a.d == b.d && a.r == b.r;
  }
};

/// One orbit of reflecting hyperplanes.
struct ReflectionOrbit {
  std::string name;
  int e = 2;
  int size = 0;                 // number of hyperplanes
  std::vector<int> classes;     // classes[a-1] holds s_H^a, a = 1..e-1, det(s_H) = zeta_e
};

struct CharacterTable {
  GroupDescriptor group;
  std::vector<std::string> class_labels;
  std::vector<Integer> class_sizes;
  std::vector<int> cod;
  std::vector<int> inverse_class;
  std::vector<std::string> irr_labels;
  Matrix<Cyclotomic> values;  // rows irreducibles, columns classes
  std::vector<ReflectionOrbit> orbits;
  int identity_class = 0;

  // Structured labels, filled for symmetric and wreath tables.
  std::vector<Partition> class_partitions;
  std::vector<Partition> irr_partitions;
  std::vector<MultiPartition> class_multi;
  std::vector<MultiPartition> irr_multi;

  int num_classes() const { return static_cast<int>(class_labels.size()); }
  int num_irr() const { return static_cast<int>(irr_labels.size()); }
  /// Throws DomainError for unknown labels.
  int irr_index(const std::string& label) const;
  int class_index(const std::string& label) const;
  Rational degree(int irr) const { return values[irr][identity_class].to_rational(); }
  int reflection_count() const;
};

/// Murnaghan-Nakayama value chi_lambda(mu) for S_n.
Integer mn_character(const Partition& lambda, const Partition& mu);
/// Colored Murnaghan-Nakayama value for G(d,1,r); classes are colored cycle types.
Cyclotomic wreath_character(const MultiPartition& lambda, const MultiPartition& alpha);

/// 1 <= n <= 10.
CharacterTable table_symmetric(int n);
/// d, r >= 1 and d*r <= 12.
CharacterTable table_wreath(int d, int r);
CharacterTable table_hardcoded(GroupKind kind);

/// Shared, lazily built tables; safe to call from several threads.
std::shared_ptr<const CharacterTable> cached_symmetric(int n);
std::shared_ptr<const CharacterTable> cached_wreath(int d, int r);
std::shared_ptr<const CharacterTable> cached_hardcoded(GroupKind kind);

/// Largest cod over classes with nonzero coefficient; 0 for the zero vector.
int cod_filtration_degree(const CharacterTable& t, const std::vector<Cyclotomic>& element);

/// Exact orthogonality checks; return a description of the first failure.
std::optional<std::string> check_column_orthogonality(const CharacterTable& t);
std::optional<std::string> check_row_orthogonality(const CharacterTable& t);

/// True when the tables agree after permuting rows and columns.
bool tables_equivalent(const CharacterTable& a, const CharacterTable& b);

std::string to_string(GroupKind kind);
std::optional<GroupKind> parse_group_kind(const std::string& name);

}  // namespace cmspets
