#include "cmspets/chartab.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>

#include "cmspets/matrix_group.hpp"

namespace cmspets {

GroupDescriptor GroupDescriptor::symmetric(int n) {
  GroupDescriptor g;
  g.kind = GroupKind::Symmetric;
  g.n = n;
  g.order = 1;
  for (int k = 2; k <= n; ++k) g.order *= k;
  g.rank = n;
  return g;
}

GroupDescriptor GroupDescriptor::wreath(int d, int r) {
  GroupDescriptor g;
  g.kind = GroupKind::Wreath;
  g.d = d;
  g.r = r;
  g.order = 1;
  for (int k = 2; k <= r; ++k) g.order *= k;
  for (int k = 0; k < r; ++k) g.order *= d;
  g.rank = r;
  return g;
}

GroupDescriptor GroupDescriptor::hardcoded(GroupKind kind) {
  GroupDescriptor g;
  g.kind = kind;
  g.rank = 2;
  switch (kind) {
    case GroupKind::B2: g.order = 8; break;
    case GroupKind::G2: g.order = 12; break;
    case GroupKind::G4: g.order = 24; break;
    default: throw DomainError("not a hardcoded group");
  }
  return g;
}

GroupDescriptor GroupDescriptor::type_d(int n) {
  GroupDescriptor g;
  g.kind = GroupKind::TypeD;
  g.n = n;
  g.d = 2;
  g.r = n;
  g.order = 1;
  for (int k = 2; k <= n; ++k) g.order *= k;
  for (int k = 1; k < n; ++k) g.order *= 2;
  g.rank = n;
  return g;
}

std::string GroupDescriptor::name() const {
  switch (kind) {
    case GroupKind::Symmetric: return "S" + std::to_string(n);
    case GroupKind::Wreath:
      return "G(" + std::to_string(d) + ",1," + std::to_string(r) + ")";
    case GroupKind::TypeD: return "G(2,2," + std::to_string(n) + ")";
    default: return to_string(kind);
  }
}

std::string to_string(GroupKind kind) {
  switch (kind) {
    case GroupKind::Symmetric: return "Symmetric";
    case GroupKind::Wreath: return "Wreath";
    case GroupKind::B2: return "B2";
    case GroupKind::G2: return "G2";
    case GroupKind::G4: return "G4";
    case GroupKind::TypeD: return "TypeD";
  }
  return "?";
}

std::optional<GroupKind> parse_group_kind(const std::string& name) {
  if (name == "B2") return GroupKind::B2;
  if (name == "G2") return GroupKind::G2;
  if (name == "G4") return GroupKind::G4;
  return std::nullopt;
}

int CharacterTable::irr_index(const std::string& label) const {
  auto it = std::find(irr_labels.begin(), irr_labels.end(), label);
  if (it == irr_labels.end()) throw DomainError("unknown character label '" + label + "'");
  return static_cast<int>(it - irr_labels.begin());
}

int CharacterTable::class_index(const std::string& label) const {
  auto it = std::find(class_labels.begin(), class_labels.end(), label);
  if (it == class_labels.end()) throw DomainError("unknown class label '" + label + "'");
  return static_cast<int>(it - class_labels.begin());
}

int CharacterTable::reflection_count() const {
  int count = 0;
  for (int c = 0; c < num_classes(); ++c) {
    if (cod[c] == 1) count += static_cast<int>(class_sizes[c].get_si());
  }
  return count;
}

namespace {

Partition drop_first(const Partition& p) {
  return Partition(std::vector<int>(p.parts().begin() + 1, p.parts().end()));
}

Integer mn_rec(const Partition& lambda, const Partition& mu,
               std::map<std::pair<Partition, Partition>, Integer>& memo) {
  if (mu.empty()) return lambda.empty() ? 1 : 0;
  auto key = std::make_pair(lambda, mu);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  const Partition rest = drop_first(mu);
  Integer total = 0;
  for (const auto& rm : remove_rim_hooks(lambda, mu[0])) {
    Integer v = mn_rec(rm.rest, rest, memo);
    total += rm.height % 2 ? Integer(-v) : v;
  }
  memo.emplace(std::move(key), total);
  return total;
}

using ZetaVec = std::vector<long>;  // coefficients of zeta_d^0..zeta_d^(d-1)

ZetaVec wreath_rec(const MultiPartition& lambda, const MultiPartition& alpha,
                   std::map<std::pair<MultiPartition, MultiPartition>, ZetaVec>& memo) {
  const int d = lambda.arity();
  int color = -1;
  for (int c = 0; c < d; ++c) {
    if (!alpha[c].empty()) {
      color = c;
      break;
    }
  }
  if (color < 0) {
    ZetaVec v(d, 0);
    if (lambda.size() == 0) v[0] = 1;
    return v;
  }
  auto key = std::make_pair(lambda, alpha);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  const int len = alpha[color][0];
  std::vector<Partition> acomps = alpha.components();
  acomps[color] = drop_first(alpha[color]);
  const MultiPartition arest(std::move(acomps));
  ZetaVec total(d, 0);
  for (int i = 0; i < d; ++i) {
    for (const auto& rm : remove_rim_hooks(lambda[i], len)) {
      std::vector<Partition> lcomps = lambda.components();
      lcomps[i] = rm.rest;
      const ZetaVec sub = wreath_rec(MultiPartition(std::move(lcomps)), arest, memo);
      const int shift = (i * color) % d;
      const long sign = rm.height % 2 ? -1 : 1;
      for (int k = 0; k < d; ++k) total[(k + shift) % d] += sign * sub[k];
    }
  }
  memo.emplace(std::move(key), total);
  return total;
}

Cyclotomic from_zeta_vec(const ZetaVec& v) {
  std::vector<Rational> r(v.begin(), v.end());
  if (v.size() == 1) return Cyclotomic(r[0]);
  return Cyclotomic::from_powers(static_cast<int>(v.size()), r);
}

Integer factorial(int n) {
  Integer f = 1;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

// Monomial matrix of a representative of the colored cycle type alpha.
CycMatrix wreath_representative(const MultiPartition& alpha, int r) {
  const int d = alpha.arity();
  CycMatrix m(r, std::vector<Cyclotomic>(r, Cyclotomic(0)));
  int start = 0;
  for (int c = 0; c < d; ++c) {
    for (int len : alpha[c].parts()) {
      // e_{start+k} -> e_{start+k+1}, the last one wraps around carrying zeta^c.
      for (int k = 0; k < len; ++k) {
        const int from = start + k;
        const int to = start + (k + 1) % len;
        m[to][from] = k == len - 1 ? Cyclotomic::zeta(d, c) : Cyclotomic(1);
      }
      start += len;
    }
  }
  return m;
}

}  // namespace

Integer mn_character(const Partition& lambda, const Partition& mu) {
  if (lambda.size() != mu.size()) throw ShapeError("partition sizes differ");
  std::map<std::pair<Partition, Partition>, Integer> memo;
  return mn_rec(lambda, mu, memo);
}

Cyclotomic wreath_character(const MultiPartition& lambda, const MultiPartition& alpha) {
  if (lambda.arity() != alpha.arity() || lambda.size() != alpha.size()) {
    throw ShapeError("multipartition shapes differ");
  }
  std::map<std::pair<MultiPartition, MultiPartition>, ZetaVec> memo;
  return from_zeta_vec(wreath_rec(lambda, alpha, memo));
}

CharacterTable table_symmetric(int n) {
  if (n < 1 || n > 10) throw DomainError("symmetric tables are limited to 1 <= n <= 10");
  CharacterTable t;
  t.group = GroupDescriptor::symmetric(n);
  auto parts = partitions_of(n);
  t.irr_partitions = parts;
  t.class_partitions.assign(parts.rbegin(), parts.rend());
  for (const auto& p : t.irr_partitions) t.irr_labels.push_back(p.str());
  const Integer nfact = factorial(n);
  for (const auto& mu : t.class_partitions) {
    t.class_labels.push_back(mu.str());
    std::map<int, int> mult;
    for (int x : mu.parts()) ++mult[x];
    Integer z = 1;
    for (auto [len, m] : mult) {
      for (int k = 0; k < m; ++k) z *= len;
      z *= factorial(m);
    }
    t.class_sizes.push_back(nfact / z);
    t.cod.push_back(n - mu.length());
  }
  const int nc = t.num_classes();
  t.inverse_class.resize(nc);
  std::iota(t.inverse_class.begin(), t.inverse_class.end(), 0);
  t.identity_class = 0;
  std::map<std::pair<Partition, Partition>, Integer> memo;
  for (const auto& lambda : t.irr_partitions) {
    std::vector<Cyclotomic> row;
    for (const auto& mu : t.class_partitions) row.emplace_back(Rational(mn_rec(lambda, mu, memo)));
    t.values.push_back(std::move(row));
  }
  if (n >= 2) {
    std::vector<int> tr(n - 2, 1);
    tr.insert(tr.begin(), 2);
    ReflectionOrbit o;
    o.name = "transpositions";
    o.e = 2;
    o.size = n * (n - 1) / 2;
    o.classes = {t.class_index(Partition(tr).str())};
    t.orbits.push_back(o);
  }
  return t;
}

CharacterTable table_wreath(int d, int r) {
  if (d < 1 || r < 1 || d * r > 12) throw DomainError("wreath tables are limited to d*r <= 12");
  CharacterTable t;
  t.group = GroupDescriptor::wreath(d, r);
  auto labels = multipartitions_of(d, r);
  t.irr_multi = labels;
  t.class_multi = labels;
  for (const auto& m : labels) {
    t.irr_labels.push_back(m.str());
    t.class_labels.push_back(m.str());
  }
  const Integer order = t.group.order;
  for (const auto& alpha : t.class_multi) {
    Integer centralizer = 1;
    for (int c = 0; c < d; ++c) {
      std::map<int, int> mult;
      for (int x : alpha[c].parts()) ++mult[x];
      for (auto [len, m] : mult) {
        centralizer *= factorial(m);
        for (int k = 0; k < m; ++k) centralizer *= d * len;
      }
    }
    t.class_sizes.push_back(order / centralizer);
    const int cod = r - alpha[0].length();
    if (codim_fixed(wreath_representative(alpha, r)) != cod) {
      throw std::logic_error("wreath class cod disagrees with its monomial representative");
    }
    t.cod.push_back(cod);
    std::vector<Partition> inv(d);
    for (int c = 0; c < d; ++c) inv[(d - c) % d] = alpha[c];
    t.inverse_class.push_back(t.class_index(MultiPartition(std::move(inv)).str()));
  }
  {
    std::vector<Partition> id(d);
    id[0] = Partition(std::vector<int>(r, 1));
    t.identity_class = t.class_index(MultiPartition(std::move(id)).str());
  }
  std::map<std::pair<MultiPartition, MultiPartition>, ZetaVec> memo;
  for (const auto& lambda : t.irr_multi) {
    std::vector<Cyclotomic> row;
    for (const auto& alpha : t.class_multi) row.push_back(from_zeta_vec(wreath_rec(lambda, alpha, memo)));
    t.values.push_back(std::move(row));
  }
  if (r >= 2) {
    std::vector<Partition> cls(d);
    std::vector<int> tr(r - 2, 1);
    tr.insert(tr.begin(), 2);
    cls[0] = Partition(tr);
    ReflectionOrbit o;
    o.name = "transpositions";
    o.e = 2;
    o.size = d * r * (r - 1) / 2;
    o.classes = {t.class_index(MultiPartition(cls).str())};
    t.orbits.push_back(o);
  }
  if (d >= 2) {
    ReflectionOrbit o;
    o.name = "diagonal";
    o.e = d;
    o.size = r;
    for (int a = 1; a < d; ++a) {
      std::vector<Partition> cls(d);
      cls[0] = Partition(std::vector<int>(r - 1, 1));
      cls[a] = Partition({1});
      o.classes.push_back(t.class_index(MultiPartition(cls).str()));
    }
    t.orbits.push_back(o);
  }
  return t;
}

namespace {

CycMatrix mat(std::vector<std::vector<Cyclotomic>> rows) { return rows; }

std::vector<CycMatrix> generators(GroupKind kind, std::vector<std::string>& names, int& conductor) {
  switch (kind) {
    case GroupKind::B2:
      names = {"s", "t"};
      conductor = 1;
      return {mat({{-1, 0}, {0, 1}}), mat({{0, 1}, {1, 0}})};
    case GroupKind::G2: {
      // Simple reflections in the basis of simple roots for the Cartan matrix [[2,-1],[-3,2]].
      names = {"s", "t"};
      conductor = 1;
      const int a12 = -1;
      const int a21 = -3;
      return {mat({{-1, -a12}, {0, 1}}), mat({{1, 0}, {-a21, -1}})};
    }
    case GroupKind::G4: {
      names = {"s", "t"};
      conductor = 12;
      const Cyclotomic z = Cyclotomic::zeta(3).lifted(12);
      const Cyclotomic third = Rational(1, 3);
      return {mat({{1, 0}, {0, z}}),
              mat({{(z * 2 + 1) * third, (z - 1) * 2 * third},
                   {(z - 1) * third, (z + 2) * third}})};
    }
    default: throw DomainError("not a hardcoded group");
  }
}

}  // namespace

CharacterTable table_hardcoded(GroupKind kind) {
  std::vector<std::string> names;
  int conductor = 1;
  const auto gens = generators(kind, names, conductor);
  const MatrixGroup g = enumerate_group(gens, names, conductor, 100);
  CharacterTable t;
  t.group = GroupDescriptor::hardcoded(kind);
  if (Integer(g.order()) != t.group.order) throw std::logic_error("hardcoded group has wrong order");
  const int nc = static_cast<int>(g.classes.size());
  std::vector<int> reps;
  for (const auto& cls : g.classes) {
    const int rep = cls.front();
    reps.push_back(rep);
    t.class_labels.push_back(g.words[rep]);
    t.class_sizes.emplace_back(static_cast<long>(cls.size()));
    t.cod.push_back(codim_fixed(g.elements[rep]));
    t.inverse_class.push_back(g.class_of[g.inverse[rep]]);
  }
  t.identity_class = g.class_of[0];

  auto column = [&](auto&& f) {
    std::vector<Cyclotomic> row;
    for (int c = 0; c < nc; ++c) row.push_back(f(reps[c]));
    return row;
  };
  auto tr = [&](int e) { return trace(g.elements[e]); };
  auto det = [&](int e) { return determinant(g.elements[e]); };
  auto sym2 = [&](int e) {
    const Cyclotomic x = tr(e);
    return (x * x + tr(g.mult[e][e])) * Cyclotomic(Rational(1, 2));
  };
  // Linear character sending generator k to signs[k].
  auto linear = [&](std::vector<int> signs) {
    return [&g, signs](int e) {
      long v = 1;
      for (int k : g.letters[e]) v *= signs[k];
      return Cyclotomic(v);
    };
  };
  auto add = [&](const std::string& label, std::vector<Cyclotomic> row) {
    t.irr_labels.push_back(label);
    t.values.push_back(std::move(row));
  };
  switch (kind) {
    case GroupKind::B2:
    case GroupKind::G2:
      add("1", column(linear({1, 1})));
      add("sgn", column(linear({-1, -1})));
      add("eps_s", column(linear({-1, 1})));
      add("eps_t", column(linear({1, -1})));
      add("V", column(tr));
      if (kind == GroupKind::G2) add("V2", column([&](int e) { return sym2(e) - 1; }));
      break;
    case GroupKind::G4:
      add("phi1,0", column([](int) { return Cyclotomic(1); }));
      add("phi1,4", column(det));
      add("phi1,8", column([&](int e) { return det(e) * det(e); }));
      add("phi2,1", column(tr));
      add("phi2,3", column([&](int e) { return tr(g.inverse[e]); }));
      add("phi2,5", column([&](int e) { return tr(e) * det(e); }));
      add("phi3,2", column(sym2));
      break;
    default: break;
  }

  // Reflection orbits: a class of reflections s with det(s) = zeta_e, where e is the
  // order of the cyclic group fixing the same hyperplane.
  std::vector<int> reflections;
  for (int e = 1; e < g.order(); ++e) {
    if (codim_fixed(g.elements[e]) == 1) reflections.push_back(e);
  }
  auto minus_identity = [&](int e) {
    CycMatrix m = g.elements[e];
    for (size_t i = 0; i < m.size(); ++i) m[i][i] -= 1;
    return m;
  };
  for (int c = 0; c < nc; ++c) {
    const int rep = reps[c];
    if (t.cod[c] != 1) continue;
    CycMatrix base = minus_identity(rep);
    int same = 0;
    for (int other : reflections) {
      CycMatrix stacked = base;
      for (auto& row : minus_identity(other)) stacked.push_back(row);
      if (rank(std::move(stacked)) == 1) ++same;
    }
    const int e = same + 1;
    if (!(det(rep) == Cyclotomic::zeta(e, 1))) continue;
    ReflectionOrbit o;
    o.name = g.words[rep];
    o.e = e;
    o.size = static_cast<int>(g.classes[c].size());
    int power = rep;
    for (int a = 1; a < e; ++a) {
      o.classes.push_back(g.class_of[power]);
      power = g.mult[power][rep];
    }
    t.orbits.push_back(o);
  }
  return t;
}

namespace {

template <class Key, class Builder>
std::shared_ptr<const CharacterTable> cached(std::map<Key, std::shared_ptr<const CharacterTable>>& cache,
                                             std::mutex& mutex, const Key& key, Builder build) {
  {
    std::lock_guard lock(mutex);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  auto table = std::make_shared<const CharacterTable>(build());
  std::lock_guard lock(mutex);
  return cache.emplace(key, std::move(table)).first->second;
}

}  // namespace

std::shared_ptr<const CharacterTable> cached_symmetric(int n) {
  static std::mutex mutex;
  static std::map<int, std::shared_ptr<const CharacterTable>> cache;
  return cached(cache, mutex, n, [n] { return table_symmetric(n); });
}

std::shared_ptr<const CharacterTable> cached_wreath(int d, int r) {
  static std::mutex mutex;
  static std::map<std::pair<int, int>, std::shared_ptr<const CharacterTable>> cache;
  return cached(cache, mutex, std::make_pair(d, r), [d, r] { return table_wreath(d, r); });
}

std::shared_ptr<const CharacterTable> cached_hardcoded(GroupKind kind) {
  static std::mutex mutex;
  static std::map<GroupKind, std::shared_ptr<const CharacterTable>> cache;
  return cached(cache, mutex, kind, [kind] { return table_hardcoded(kind); });
}

int cod_filtration_degree(const CharacterTable& t, const std::vector<Cyclotomic>& element) {
  if (static_cast<int>(element.size()) != t.num_classes()) {
    throw ShapeError("center element length differs from the class count");
  }
  int deg = 0;
  for (int c = 0; c < t.num_classes(); ++c) {
    if (!element[c].is_zero()) deg = std::max(deg, t.cod[c]);
  }
  return deg;
}

std::optional<std::string> check_column_orthogonality(const CharacterTable& t) {
  const Rational order(t.group.order);
  for (int c = 0; c < t.num_classes(); ++c) {
    for (int c2 = c; c2 < t.num_classes(); ++c2) {
      Cyclotomic s = 0;
      for (int i = 0; i < t.num_irr(); ++i) s += t.values[i][c] * t.values[i][c2].conj();
      const Cyclotomic expected = c == c2 ? Cyclotomic(Rational(order / Rational(t.class_sizes[c]))) : Cyclotomic(0);
      if (!(s == expected)) {
        return "columns " + t.class_labels[c] + " and " + t.class_labels[c2] + " give " + s.str();
      }
    }
  }
  return std::nullopt;
}

std::optional<std::string> check_row_orthogonality(const CharacterTable& t) {
  const Rational order(t.group.order);
  for (int i = 0; i < t.num_irr(); ++i) {
    for (int j = i; j < t.num_irr(); ++j) {
      Cyclotomic s = 0;
      for (int c = 0; c < t.num_classes(); ++c) {
        s += t.values[i][c] * t.values[j][c].conj() * Cyclotomic(Rational(t.class_sizes[c]));
      }
      const Cyclotomic expected = i == j ? Cyclotomic(order) : Cyclotomic(0);
      if (!(s == expected)) {
        return "rows " + t.irr_labels[i] + " and " + t.irr_labels[j] + " give " + s.str();
      }
    }
  }
  return std::nullopt;
}

namespace {

std::string value_key(const Cyclotomic& v) { return v.normalized().str() + "@" + std::to_string(v.normalized().conductor()); }

bool rows_match(const CharacterTable& a, const CharacterTable& b, const std::vector<int>& perm) {
  std::vector<std::string> ra;
  std::vector<std::string> rb;
  for (int i = 0; i < a.num_irr(); ++i) {
    std::string ka;
    std::string kb;
    for (size_t c = 0; c < perm.size(); ++c) {
      ka += value_key(a.values[i][c]) + ";";
      kb += value_key(b.values[i][perm[c]]) + ";";
    }
    ra.push_back(ka);
    rb.push_back(kb);
  }
  std::sort(ra.begin(), ra.end());
  std::sort(rb.begin(), rb.end());
  return ra == rb;
}

bool search_columns(const CharacterTable& a, const CharacterTable& b, std::vector<int>& perm,
                    std::vector<bool>& used) {
  const size_t c = perm.size();
  if (static_cast<int>(c) == a.num_classes()) return rows_match(a, b, perm);
  for (int k = 0; k < b.num_classes(); ++k) {
    if (used[k] || a.class_sizes[c] != b.class_sizes[k] || a.cod[c] != b.cod[k]) continue;
    used[k] = true;
    perm.push_back(k);
    if (search_columns(a, b, perm, used)) return true;
    perm.pop_back();
    used[k] = false;
  }
  return false;
}

}  // namespace

bool tables_equivalent(const CharacterTable& a, const CharacterTable& b) {
  if (a.num_classes() != b.num_classes() || a.num_irr() != b.num_irr()) return false;
  std::vector<int> perm;
  std::vector<bool> used(b.num_classes(), false);
  return search_columns(a, b, perm, used);
}

}  // namespace cmspets
