#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "cmspets/cyclotomic.hpp"

namespace cmspets {

template <class T>
using Matrix = std::vector<std::vector<T>>;

/// Reduced row echelon form in place. Returns pivot columns.
template <class T>
std::vector<int> rref(Matrix<T>& m) {
  std::vector<int> pivots;
  if (m.empty()) return pivots;
  const size_t rows = m.size();
  const size_t cols = m[0].size();
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t p = r;
    while (p < rows && is_zero(m[p][c])) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    const T inv = T(1) / m[r][c];
    for (size_t j = c; j < cols; ++j) m[r][j] = m[r][j] * inv;
    for (size_t i = 0; i < rows; ++i) {
      if (i == r || is_zero(m[i][c])) continue;
      const T f = m[i][c];
      for (size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    pivots.push_back(static_cast<int>(c));
    ++r;
  }
  return pivots;
}

template <class T>
int rank(Matrix<T> m) {
  return static_cast<int>(rref(m).size());
}

/// Basis of {x : m x = 0}; `cols` is needed when m has no rows.
template <class T>
Matrix<T> nullspace(Matrix<T> m, size_t cols) {
  const auto pivots = rref(m);
  std::vector<bool> is_pivot(cols, false);
  for (int p : pivots) is_pivot[p] = true;
  Matrix<T> basis;
  for (size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<T> v(cols, T(0));
    v[f] = T(1);
    for (size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -m[i][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Basis of the intersection of two subspaces given by spanning rows.
template <class T>
Matrix<T> intersect_spans(const Matrix<T>& u, const Matrix<T>& v, size_t dim) {
  if (u.empty() || v.empty()) return {};
  // Solve sum a_i u_i - sum b_j v_j = 0, read off sum a_i u_i.
  const size_t nu = u.size();
  const size_t nv = v.size();
  Matrix<T> sys(dim, std::vector<T>(nu + nv, T(0)));
  for (size_t k = 0; k < dim; ++k) {
    for (size_t i = 0; i < nu; ++i) sys[k][i] = u[i][k];
    for (size_t j = 0; j < nv; ++j) sys[k][nu + j] = -v[j][k];
  }
  Matrix<T> out;
  for (const auto& sol : nullspace(std::move(sys), nu + nv)) {
    std::vector<T> w(dim, T(0));
    for (size_t i = 0; i < nu; ++i) {
      if (is_zero(sol[i])) continue;
      for (size_t k = 0; k < dim; ++k) w[k] += sol[i] * u[i][k];
    }
    out.push_back(std::move(w));
  }
  Matrix<T> reduced = out;
  const auto piv = rref(reduced);
  reduced.resize(piv.size());
  return reduced;
}

/// True when x lies in the row span of `rows`.
template <class T>
bool in_span(const Matrix<T>& rows, const std::vector<T>& x) {
  Matrix<T> m = rows;
  const int before = rank(m);
  m.push_back(x);
  return rank(std::move(m)) == before;
}

}  // namespace cmspets
