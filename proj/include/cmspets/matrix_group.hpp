#pragma once

#include <string>
#include <vector>

#include "cmspets/cyclotomic.hpp"
#include "cmspets/linalg.hpp"

namespace cmspets {

using CycMatrix = Matrix<Cyclotomic>;

CycMatrix identity_matrix(int n);
CycMatrix operator*(const CycMatrix& a, const CycMatrix& b);
Cyclotomic trace(const CycMatrix& m);
Cyclotomic determinant(const CycMatrix& m);
/// Codimension of the fixed space.
int codim_fixed(const CycMatrix& m);

/// A finite group given by generating matrices, enumerated breadth first.
struct MatrixGroup {
  std::vector<CycMatrix> elements;   // elements[0] is the identity
  std::vector<std::string> words;    // shortest word per element, letters are generator names
  std::vector<std::vector<int>> mult;
  std::vector<int> inverse;
  std::vector<std::vector<int>> classes;  // conjugacy classes, ordered by first BFS element
  std::vector<int> class_of;
  /// Word for each generator, as a sequence of generator indices, per element.
  std::vector<std::vector<int>> letters;

  int order() const { return static_cast<int>(elements.size()); }
  int dimension() const { return static_cast<int>(elements[0].size()); }
};

/// Throws DomainError if more than `max_order` elements turn up.
MatrixGroup enumerate_group(const std::vector<CycMatrix>& gens,
                            const std::vector<std::string>& names, int conductor,
                            int max_order = 2000);

}  // namespace cmspets
