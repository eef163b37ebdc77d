#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "cmspets/rational.hpp"

namespace cmspets {

/// Integer partition; parts weakly decreasing and strictly positive.
class Partition {
 public:
  Partition() = default;
  /// Trailing zeros are dropped; anything else out of order throws ShapeError.
  explicit Partition(std::vector<int> parts);

  static Partition parse(std::string_view text);

  const std::vector<int>& parts() const { return parts_; }
  int size() const { return size_; }
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  int operator[](int i) const { return i < length() ? parts_[i] : 0; }

  Partition conjugate() const;
  /// "5,2,1"; the empty partition prints as "".
  std::string str() const;

  friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }
  friend bool operator<(const Partition& a, const Partition& b) { return a.parts_ < b.parts_; }

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

/// A d-tuple of partitions.
class MultiPartition {
 public:
  MultiPartition() = default;
  explicit MultiPartition(std::vector<Partition> comps) : comps_(std::move(comps)) {}

  /// "|"-separated components, e.g. "2,1||1".
  static MultiPartition parse(std::string_view text);

  const std::vector<Partition>& components() const { return comps_; }
  const Partition& operator[](int i) const { return comps_[i]; }
  int arity() const { return static_cast<int>(comps_.size()); }
  int size() const;
  std::string str() const;

  friend bool operator==(const MultiPartition& a, const MultiPartition& b) {
    return a.comps_ == b.comps_;
  }
  friend bool operator<(const MultiPartition& a, const MultiPartition& b) {
    return a.comps_ < b.comps_;
  }

 private:
  std::vector<Partition> comps_;
};

/// All partitions of n, in reverse lexicographic order ((n) first).
std::vector<Partition> partitions_of(int n);
/// All d-multipartitions of total size r.
std::vector<MultiPartition> multipartitions_of(int d, int r);
/// Number of partitions of n.
long partition_count(int n);

/// Hook lengths, one per cell, row by row.
std::vector<int> hooks(const Partition& p);
/// a = sum (k-1) lambda_k over 1-indexed rows.
int a_invariant(const Partition& p);
/// Number of standard tableaux.
Integer standard_tableaux(const Partition& p);
/// Degree of the irreducible character of G(d,1,r) labelled by `m`.
Integer multitableaux(const MultiPartition& m);

/// No hook of length d. Also checks that no hook is divisible by d agrees.
bool is_d_core(const Partition& p, int d);

/// beta_i = lambda_i + L - i for i = 1..L, decreasing.
std::vector<int> beta_set(const Partition& p, int length);
/// Inverse of beta_set for any finite set of distinct nonnegative integers.
Partition from_beta_set(std::vector<int> beads);

struct Abacus {
  int d = 1;
  int length = 0;               // bead count L
  std::vector<int> beads;       // increasing
  std::vector<int> runner_counts;
  std::vector<int> b;           // runner_counts[j] - runner_counts[0]
  int first_gap = 0;
};

/// d-abacus of p with L beads; L = -1 selects L = length(p). Requires L >= length(p)
/// and L = length(p) mod d.
Abacus abacus(const Partition& p, int d, int length = -1);

/// Number of cells (r, c), 0-indexed, with r - c = k mod d.
std::vector<int> residues(const Partition& p, int d);

struct CoreQuotient {
  Partition core;
  MultiPartition quotient;
};

/// Core and quotient. The quotient is read off an abacus whose bead count
/// is congruent mod d to the length of the core; component i is runner i.
CoreQuotient core_quotient(const Partition& p, int d);
Partition d_core(const Partition& p, int d);
/// Inverse of core_quotient. Throws DomainError when `core` is not a d-core.
Partition par_d(const Partition& core, const MultiPartition& quotient);

/// Ways to remove a rim hook of length `len`: the smaller partition and the leg length.
struct RimHookRemoval {
  Partition rest;
  int height;
};
std::vector<RimHookRemoval> remove_rim_hooks(const Partition& p, int len);

struct CoreData {
  Partition core;
  int d = 1;
  std::vector<int> b;
  std::vector<int> rho;
  std::vector<int> k;
  std::vector<int> l;
};

/// b, residues and the k and l sequences of a d-core. Throws DomainError otherwise.
CoreData k_l_sequences(const Partition& core, int d);
/// k_j = l_{j+1-m} for every j mod d, m = length of the core.
bool check_k_equals_l(const CoreData& data);

/// Every d-core of size at most `max_size`.
std::vector<Partition> d_cores_up_to(int d, int max_size);

}  // namespace cmspets
