#include "cmspets/matrix_group.hpp"

#include <deque>
#include <map>

namespace cmspets {

CycMatrix identity_matrix(int n) {
  CycMatrix m(n, std::vector<Cyclotomic>(n, Cyclotomic(0)));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

CycMatrix operator*(const CycMatrix& a, const CycMatrix& b) {
  const size_t n = a.size();
  const size_t k = b.size();
  const size_t p = b.empty() ? 0 : b[0].size();
  CycMatrix c(n, std::vector<Cyclotomic>(p, Cyclotomic(0)));
  for (size_t i = 0; i < n; ++i) {
    for (size_t l = 0; l < k; ++l) {
      if (a[i][l].is_zero()) continue;
      for (size_t j = 0; j < p; ++j) c[i][j] += a[i][l] * b[l][j];
    }
  }
  return c;
}

Cyclotomic trace(const CycMatrix& m) {
  Cyclotomic t = 0;
  for (size_t i = 0; i < m.size(); ++i) t += m[i][i];
  return t;
}

Cyclotomic determinant(const CycMatrix& m) {
  CycMatrix a = m;
  const size_t n = a.size();
  Cyclotomic det = 1;
  for (size_t c = 0; c < n; ++c) {
    size_t p = c;
    while (p < n && a[p][c].is_zero()) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(a[p], a[c]);
      det = -det;
    }
    det *= a[c][c];
    const Cyclotomic inv = a[c][c].inverse();
    for (size_t i = c + 1; i < n; ++i) {
      if (a[i][c].is_zero()) continue;
      const Cyclotomic f = a[i][c] * inv;
      for (size_t j = c; j < n; ++j) a[i][j] -= f * a[c][j];
    }
  }
  return det;
}

int codim_fixed(const CycMatrix& m) {
  CycMatrix d = m;
  for (size_t i = 0; i < d.size(); ++i) d[i][i] -= 1;
  return rank(std::move(d));
}

namespace {

std::string key_of(const CycMatrix& m, int conductor) {
  std::string k;
  for (const auto& row : m) {
    for (const auto& x : row) {
      k += x.lifted(conductor).str();
      k += ';';
    }
  }
  return k;
}

}  // namespace

MatrixGroup enumerate_group(const std::vector<CycMatrix>& gens,
                            const std::vector<std::string>& names, int conductor,
                            int max_order) {
  if (gens.empty()) throw DomainError("no generators");
  MatrixGroup g;
  std::map<std::string, int> index;
  auto add = [&](CycMatrix m, std::string word, std::vector<int> letters) {
    auto key = key_of(m, conductor);
    auto it = index.find(key);
    if (it != index.end()) return it->second;
    const int id = static_cast<int>(g.elements.size());
    if (id >= max_order) throw DomainError("group larger than the enumeration cap");
    index.emplace(std::move(key), id);
    g.elements.push_back(std::move(m));
    g.words.push_back(std::move(word));
    g.letters.push_back(std::move(letters));
    return id;
  };
  add(identity_matrix(static_cast<int>(gens[0].size())), "1", {});
  for (size_t i = 0; i < g.elements.size(); ++i) {
    for (size_t k = 0; k < gens.size(); ++k) {
      auto letters = g.letters[i];
      letters.push_back(static_cast<int>(k));
      std::string word = i == 0 ? names[k] : g.words[i] + names[k];
      add(g.elements[i] * gens[k], std::move(word), std::move(letters));
    }
  }
  const int n = g.order();
  g.mult.assign(n, std::vector<int>(n, -1));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      auto it = index.find(key_of(g.elements[i] * g.elements[j], conductor));
      if (it == index.end()) throw std::logic_error("group not closed under multiplication");
      g.mult[i][j] = it->second;
    }
  }
  g.inverse.assign(n, -1);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (g.mult[i][j] == 0) g.inverse[i] = j;
    }
  }
  g.class_of.assign(n, -1);
  for (int i = 0; i < n; ++i) {
    if (g.class_of[i] >= 0) continue;
    const int cls = static_cast<int>(g.classes.size());
    g.classes.emplace_back();
    for (int h = 0; h < n; ++h) {
      const int c = g.mult[g.mult[h][i]][g.inverse[h]];
      if (g.class_of[c] < 0) {
        g.class_of[c] = cls;
        g.classes[cls].push_back(c);
      }
    }
  }
  return g;
}

}  // namespace cmspets
