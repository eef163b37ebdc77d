#include "cmspets/checks.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <future>
#include <numeric>
#include <set>
#include <stdexcept>

#include "cmspets/cmgeom.hpp"

namespace cmspets {

namespace {

struct Field {
  const char* key;
  int CheckOptions::*ptr;
};

const std::vector<Field>& fields() {
  static const std::vector<Field> f = {
      {"max_core_size", &CheckOptions::max_core_size},
      {"max_d", &CheckOptions::max_d},
      {"cuspidal_max_n", &CheckOptions::cuspidal_max_n},
      {"series_max_n", &CheckOptions::series_max_n},
      {"series_max_d", &CheckOptions::series_max_d},
      {"quotient_max_n", &CheckOptions::quotient_max_n},
      {"quotient_max_d", &CheckOptions::quotient_max_d},
      {"classical_max_n", &CheckOptions::classical_max_n},
      {"symbol_max_r", &CheckOptions::symbol_max_r},
      {"filtration_max_n", &CheckOptions::filtration_max_n},
      {"michel_max_n", &CheckOptions::michel_max_n},
      {"chartab_max_n", &CheckOptions::chartab_max_n},
      {"wreath_max_order", &CheckOptions::wreath_max_order},
      {"brute_force_max_n", &CheckOptions::brute_force_max_n},
  };
  return f;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

using Clock = std::chrono::steady_clock;

template <class F>
CheckReport timed(const std::string& name, F&& body) {
  const auto start = Clock::now();
  CheckReport r = body();
  r.name = name;
  r.elapsed_ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
  r.sort();
  return r;
}

std::string join(const std::vector<int>& v) {
  std::string s;
  for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return "(" + s + ")";
}

std::string pad2(int n) { return (n < 10 ? "0" : "") + std::to_string(n); }

// ---- k-eq-l

CheckReport check_k_eq_l(const CheckOptions& o) {
  CheckReport r;
  std::vector<std::future<std::vector<CaseResult>>> jobs;
  for (int d = 2; d <= o.max_d; ++d) {
    jobs.push_back(std::async(std::launch::async, [d, &o] {
      std::vector<CaseResult> out;
      for (const auto& core : d_cores_up_to(d, o.max_core_size)) {
        const CoreData data = k_l_sequences(core, d);
        bool ok = check_k_equals_l(data);
        std::string detail = "k = " + join(data.k) + ", l = " + join(data.l);
        if (d == 4 && core == Partition({5, 2, 1})) {
          ok = ok && data.b == std::vector<int>{0, 1, 0, 2} && data.rho == std::vector<int>{3, 2, 2, 1};
          detail = "b = " + join(data.b) + ", Res = " + join(data.rho) + ", " + detail;
        }
        out.push_back({"d" + std::to_string(d) + "/" + core.str(), ok, detail});
      }
      return out;
    }));
  }
  for (auto& j : jobs) {
    for (auto& c : j.get()) r.cases.push_back(std::move(c));
  }
  return r;
}

// ---- type-a-cuspidal

std::vector<CaseResult> cuspidal_for_n(int n) {
  std::vector<CaseResult> out;
  const auto parts = partitions_of(n);
  std::vector<RatPoly> degrees;
  for (const auto& l : parts) degrees.push_back(generic_degree_A(l));
  for (int d = 2; d <= n; ++d) {
    int bad = 0;
    std::string first;
    int cusp = 0;
    for (size_t i = 0; i < parts.size(); ++i) {
      const int mult = cyclotomic_valuation(degrees[i], d);
      const int quo = core_quotient(parts[i], d).quotient.size();
      const bool cuspidal = is_d_cuspidal_A(parts[i], d);
      const bool core = is_d_core(parts[i], d);
      cusp += cuspidal;
      if (mult != n / d - quo || cuspidal != core) {
        if (bad++ == 0) {
          first = parts[i].str() + ": Phi_d multiplicity " + std::to_string(mult) + ", floor(n/d) - |quo| = " +
                  std::to_string(n / d - quo);
        }
      }
    }
    out.push_back({"n" + pad2(n) + "/d" + pad2(d), bad == 0,
                   std::to_string(parts.size()) + " partitions, " + std::to_string(cusp) + " cuspidal" +
                       (bad ? ", " + std::to_string(bad) + " mismatches, first " + first : "")});
  }
  if (n >= 2) {
    // d = 1: no partition of n >= 2 is a 1-core, and none is 1-cuspidal.
    int cusp = 0;
    for (const auto& l : parts) cusp += is_d_cuspidal_A(l, 1) || is_d_core(l, 1);
    out.push_back({"n" + pad2(n) + "/d01", cusp == 0, std::to_string(cusp) + " cuspidal"});
  }
  return out;
}

CheckReport check_type_a_cuspidal(const CheckOptions& o) {
  CheckReport r;
  std::vector<std::future<std::vector<CaseResult>>> jobs;
  for (int n = 1; n <= o.cuspidal_max_n; ++n) jobs.push_back(std::async(std::launch::async, cuspidal_for_n, n));
  for (auto& j : jobs) {
    for (auto& c : j.get()) r.cases.push_back(std::move(c));
  }
  const bool small = is_d_cuspidal_A(Partition({2, 1}), 2) && !is_d_cuspidal_A(Partition({3}), 2);
  r.add("example/2,1-vs-3", small, "(2,1) is 2-cuspidal, (3) is not");
  return r;
}

// ---- type-a-series

std::vector<CaseResult> series_for(int n, int d) {
  std::vector<CaseResult> out;
  const std::string tag = "n" + pad2(n) + "/d" + std::to_string(d);
  const auto blocks = d_series_A(n, d);
  std::multiset<Partition> seen;
  bool members_ok = true;
  bool params_ok = true;
  std::string detail;
  for (const auto& b : blocks) {
    for (size_t i = 0; i < b.members.size(); ++i) {
      seen.insert(b.members[i]);
      members_ok = members_ok && par_d(b.core, b.labels[i]) == b.members[i] && b.labels[i].arity() == d;
    }
    members_ok = members_ok && b.members.size() == multipartitions_of(d, b.r).size() &&
                 n == b.core.size() + d * b.r;
    Parameter expected;
    if (b.r >= 2) expected.values.push_back({Rational(d), Rational(0)});
    if (d >= 2 && b.r >= 1) {
      std::vector<Rational> kg;
      for (int v : k_l_sequences(b.core, d).k) kg.push_back(v);
      expected.values.push_back(kg);
    }
    params_ok = params_ok && b.pair.parameter == expected && b.pair.relative == GroupDescriptor::wreath(d, b.r);
    if (b.core.empty() && b.r == 1 && d == n && d >= 2) {
      // Base case: k^empty = (0, 1, ..., n-1).
      std::vector<Rational> base(n);
      for (int j = 0; j < n; ++j) base[j] = j;
      params_ok = params_ok && !b.pair.parameter.values.empty() && b.pair.parameter.values.back() == base;
    }
  }
  const auto all = partitions_of(n);
  const bool complete = seen == std::multiset<Partition>(all.begin(), all.end());
  detail = std::to_string(blocks.size()) + " blocks over " + std::to_string(all.size()) + " partitions";
  out.push_back({"series/" + tag, complete && members_ok, detail});
  out.push_back({"parameter/" + tag, params_ok, ""});
  return out;
}

CaseResult quotient_roundtrip(int n, int d) {
  int bad = 0;
  std::string first;
  const auto parts = partitions_of(n);
  for (const auto& l : parts) {
    const CoreQuotient cq = core_quotient(l, d);
    const bool ok = par_d(cq.core, cq.quotient) == l && l.size() == cq.core.size() + d * cq.quotient.size() &&
                    is_d_core(cq.core, d);
    if (!ok && bad++ == 0) first = l.str();
  }
  return {"bijection/n" + pad2(n) + "/d" + std::to_string(d), bad == 0,
          std::to_string(parts.size()) + " partitions" + (bad ? ", first failure " + first : "")};
}

CheckReport check_type_a_series(const CheckOptions& o) {
  CheckReport r;
  std::vector<std::future<std::vector<CaseResult>>> jobs;
  for (int n = 1; n <= std::max(o.series_max_n, o.quotient_max_n); ++n) {
    jobs.push_back(std::async(std::launch::async, [n, &o] {
      std::vector<CaseResult> out;
      if (n <= o.series_max_n) {
        for (int d = 1; d <= o.series_max_d; ++d) {
          for (auto& c : series_for(n, d)) out.push_back(std::move(c));
        }
      }
      if (n <= o.quotient_max_n) {
        for (int d = 1; d <= o.quotient_max_d; ++d) out.push_back(quotient_roundtrip(n, d));
      }
      return out;
    }));
  }
  for (auto& j : jobs) {
    for (auto& c : j.get()) r.cases.push_back(std::move(c));
  }
  const auto blocks = d_series_A(3, 2);
  std::multiset<size_t> sizes;
  for (const auto& b : blocks) sizes.insert(b.members.size());
  r.add("example/n3-d2", blocks.size() == 2 && sizes == std::multiset<size_t>{1, 2}, "series sizes {1, 2}");
  return r;
}

// ---- rank2

CheckReport check_rank2(const CheckOptions&) {
  CheckReport r;
  for (GroupKind kind : {GroupKind::B2, GroupKind::G2}) {
    r.add(rank2_fixed_check(kind), "fixed/");
    const auto t = cached_hardcoded(kind);
    const FamilyPartition f = hardcoded_families(kind);
    r.add("families/" + to_string(kind), covers_irreducibles(*t, f),
          std::to_string(f.blocks.size()) + " families");
  }
  return r;
}

// ---- g4

CheckReport check_g4(const CheckOptions&) {
  CheckReport r;
  auto sub = [](std::string name, std::function<void(CheckReport&)> fill) {
    return timed(name, [&] {
      CheckReport s;
      fill(s);
      return s;
    });
  };
  r.suites.push_back(sub("points", [](CheckReport& s) { s.add(g4_point_checks()); }));
  r.suites.push_back(sub("homogeneity", [](CheckReport& s) { s.add(g4_homogeneity_checks()); }));
  r.suites.push_back(sub("embeddings", [](CheckReport& s) {
    for (int d : {4, 6}) {
      for (const auto& l : g4_surface_checks(d)) {
        if (l.id.find("/embedding") != std::string::npos) s.add(l.id, l.pass, l.detail);
      }
    }
  }));
  r.suites.push_back(sub("surfaces", [](CheckReport& s) {
    for (int d : {1, 4, 6}) {
      const auto lines = g4_surface_checks(d);
      for (const auto& l : lines) {
        if (l.id.find("/embedding") == std::string::npos) s.add(l.id, l.pass, l.detail);
      }
    }
    // Which fixed points lie on S4 and S6.
    const std::map<int, std::set<std::string>> expected = {
        {4, {"z_club", "z_diamond", "z_spade"}}, {6, {"z_club", "z_heart", "z_spade"}}};
    for (const auto& [d, names] : expected) {
      std::set<std::string> on;
      for (const auto& l : g4_surface_checks(d)) {
        const auto slash = l.id.find('/');
        const std::string tail = l.id.substr(slash + 1);
        if (tail.rfind("z_", 0) == 0 && l.detail == "on surface") on.insert(tail);
      }
      std::string got;
      for (const auto& n : on) got += (got.empty() ? "" : ",") + n;
      s.add("placement/d" + std::to_string(d), on == names, "{" + got + "}");
    }
  }));
  r.suites.push_back(sub("series-geometry", [](CheckReport& s) {
    for (int d : {4, 6}) s.add(g4_series_geometry_crosscheck(d));
  }));
  r.suites.push_back(sub("euler", [](CheckReport& s) {
    const auto t = cached_hardcoded(GroupKind::G4);
    const Parameter ksp = spetsial_parameter(*t);
    const FamilyPartition f = hardcoded_families(GroupKind::G4);
    const std::map<std::string, long> expected = {{"club", 12}, {"diamond", 4}, {"heart", 6}, {"spade", 0}};
    for (size_t i = 0; i < f.names.size(); ++i) {
      bool ok = true;
      std::string vals;
      for (const auto& chi : f.blocks[i]) {
        const Cyclotomic w = euler_invariant(*t, ksp, t->irr_index(chi));
        vals += (vals.empty() ? "" : ", ") + chi + ": " + w.normalized().str();
        ok = ok && w == Cyclotomic(expected.at(f.names[i]));
      }
      s.add("family/" + f.names[i], ok, vals);
    }
    for (const auto& l : g4_euler_observation()) s.add("observation/" + l.id.substr(l.id.find('/') + 1), l.pass, l.detail);
  }));
  r.suites.push_back(sub("a-plus-A", [](CheckReport& s) {
    s.add(g4_consistency());
    const SpetsDatum& g = g4_datum();
    const std::map<std::string, int> expected = {{"club", 0}, {"diamond", 8}, {"heart", 6}, {"spade", 12}};
    for (size_t i = 0; i < g.families.names.size(); ++i) {
      bool ok = true;
      for (const auto& label : g.families.blocks[i]) {
        auto [a, A] = a_A_of(g.unipotent(label).degree);
        ok = ok && a + A == expected.at(g.families.names[i]);
      }
      s.add("value/" + g.families.names[i], ok, "a+A = " + std::to_string(expected.at(g.families.names[i])));
    }
  }));
  return r;
}

// ---- classical

CheckReport check_classical(const CheckOptions& o) {
  CheckReport r;
  for (ClassicalType type : {ClassicalType::B, ClassicalType::Dplus, ClassicalType::Dminus}) {
    const int lo = type == ClassicalType::B ? 2 : 4;
    for (int n = lo; n <= o.classical_max_n; ++n) {
      const ClassicalComparison c = classical_hc(type, n);
      std::string detail = std::to_string(c.hc_side.size()) + " cuspidal ranks";
      for (const auto& d : c.diff) detail += "; " + d;
      r.add("table/" + to_string(type) + "/n" + pad2(n), c.diff.empty() && c.hc_side == c.cm_side, detail);
    }
  }
  for (int k = 1; k <= o.symbol_max_r; ++k) {
    const SymbolCheck s = symbol_check(k);
    const bool ok = s.same_entries && s.cuspidal.defect() == 2 * k + 1 && s.principal.defect() == 1;
    r.add("symbol/r" + pad2(k), ok, s.cuspidal.str() + " vs " + s.principal.str());
  }
  auto ranks = [](ClassicalType type, int n) {
    std::vector<int> v;
    for (const auto& row : classical_hc(type, n).hc_side) v.push_back(row.r);
    std::sort(v.begin(), v.end());
    return v;
  };
  r.add("example/B-n2", ranks(ClassicalType::B, 2) == std::vector<int>{0, 1}, join(ranks(ClassicalType::B, 2)));
  r.add("example/Dplus-n4", ranks(ClassicalType::Dplus, 4) == std::vector<int>{0, 2},
        join(ranks(ClassicalType::Dplus, 4)));
  return r;
}

// ---- filtration

CheckReport check_filtration(const CheckOptions& o) {
  CheckReport r;
  std::vector<std::future<FiltrationReport>> jobs;
  for (int n = 2; n <= o.filtration_max_n; ++n) {
    for (int d : {2, 3}) {
      if (d <= n) jobs.push_back(std::async(std::launch::async, check_filtration_conjecture, n, d));
    }
  }
  for (auto& j : jobs) {
    const FiltrationReport f = j.get();
    for (const auto& c : f.cases) {
      r.add("n" + pad2(f.n) + "-d" + std::to_string(f.d) + "/" + (c.core.empty() ? "empty" : c.core) + "/j" +
                pad2(c.j),
            c.pass,
            "dim F_j = " + std::to_string(c.source_dim) + ", image rank " + std::to_string(c.target_rank) +
                (c.detail.empty() ? "" : ", " + c.detail));
    }
  }
  return r;
}

// ---- michel

CheckReport check_michel(const CheckOptions& o) {
  CheckReport r;
  std::vector<std::future<CaseResult>> jobs;
  for (int n = 1; n <= o.michel_max_n; ++n) {
    for (int d = 1; d <= n; ++d) {
      if (n % d != 0) continue;
      jobs.push_back(std::async(std::launch::async, [n, d] {
        int bad = 0;
        int nonzero = 0;
        std::string first;
        const auto cases = michel_identity_A(n, d);
        for (const auto& c : cases) {
          nonzero += c.lhs != 0;
          if (!c.pass() && bad++ == 0) {
            first = c.lambda.str() + ": " + to_string(c.lhs) + " vs " + to_string(c.rhs);
          }
        }
        return CaseResult{"n" + pad2(n) + "/d" + pad2(d), bad == 0,
                          std::to_string(cases.size()) + " partitions, " + std::to_string(nonzero) + " nonzero" +
                              (bad ? ", first failure " + first : "")};
      }));
    }
  }
  for (auto& j : jobs) r.cases.push_back(j.get());
  return r;
}

// ---- chartab

CheckReport check_chartab(const CheckOptions& o) {
  CheckReport r;
  auto ortho = [&r](const std::string& id, const CharacterTable& t) {
    const auto col = check_column_orthogonality(t);
    const auto row = check_row_orthogonality(t);
    r.add("orthogonality/" + id, !col && !row, col ? *col : (row ? *row : ""));
  };
  for (int n = 1; n <= o.chartab_max_n; ++n) ortho("S" + pad2(n), *cached_symmetric(n));
  for (int d = 2; d <= o.wreath_max_order; ++d) {
    for (int k = 1; d * k <= o.wreath_max_order; ++k) {
      ortho("G(" + std::to_string(d) + ",1," + std::to_string(k) + ")", *cached_wreath(d, k));
    }
  }
  for (GroupKind kind : {GroupKind::B2, GroupKind::G2, GroupKind::G4}) ortho(to_string(kind), *cached_hardcoded(kind));

  for (int n = 1; n <= std::min(o.chartab_max_n, 6); ++n) {
    r.add("wreath-1/r" + pad2(n), tables_equivalent(*cached_wreath(1, n), *cached_symmetric(n)), "");
  }
  r.add("wreath-2/B2", tables_equivalent(*cached_wreath(2, 2), *cached_hardcoded(GroupKind::B2)), "");

  for (int n = 1; n <= o.brute_force_max_n; ++n) {
    const auto t = cached_symmetric(n);
    const auto parts = partitions_of(n);
    const auto fro = frobenius_table(n);
    int bad = 0;
    for (size_t i = 0; i < parts.size(); ++i) {
      for (size_t j = 0; j < parts.size(); ++j) {
        const int irr = t->irr_index(parts[i].str());
        int cls = -1;
        for (int c = 0; c < t->num_classes(); ++c) {
          if (t->class_partitions[c] == parts[j]) cls = c;
        }
        if (cls < 0 || t->values[irr][cls] != Cyclotomic(Rational(fro[i][j]))) ++bad;
      }
    }
    r.add("frobenius/S" + pad2(n), bad == 0, std::to_string(bad) + " differing entries");
  }

  for (int n = 1; n <= o.chartab_max_n; ++n) {
    const auto t = cached_symmetric(n);
    const Parameter ksp = spetsial_parameter(*t);
    int bad = 0;
    for (int i = 0; i < t->num_irr(); ++i) {
      auto [a, A] = a_A_of(generic_degree_A(t->irr_partitions[i]));
      if (Cyclotomic(a + A) + euler_invariant(*t, ksp, i) != Cyclotomic(n * (n - 1))) ++bad;
    }
    r.add("a+A+omega/S" + pad2(n), bad == 0, "n(n-1) = " + std::to_string(n * (n - 1)));
  }
  return r;
}

using Runner = CheckReport (*)(const CheckOptions&);

const std::vector<std::pair<std::string, Runner>>& runners() {
  static const std::vector<std::pair<std::string, Runner>> r = {
      {"k-eq-l", check_k_eq_l},         {"type-a-cuspidal", check_type_a_cuspidal},
      {"type-a-series", check_type_a_series}, {"rank2", check_rank2},
      {"g4", check_g4},                 {"classical", check_classical},
      {"filtration", check_filtration}, {"michel", check_michel},
      {"chartab", check_chartab},
  };
  return r;
}

}  // namespace

void CheckOptions::set(const std::string& key, const std::string& value) {
  for (const auto& f : fields()) {
    if (key != f.key) continue;
    size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(value, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != value.size() || value.empty() || v < 0) {
      throw std::invalid_argument("bad value for " + key + ": '" + value + "'");
    }
    this->*(f.ptr) = v;
    return;
  }
  throw std::invalid_argument("unknown option '" + key + "'");
}

std::map<std::string, int> CheckOptions::values() const {
  std::map<std::string, int> m;
  for (const auto& f : fields()) m[f.key] = this->*(f.ptr);
  return m;
}

CheckOptions read_config(const std::string& path, CheckOptions base) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot read config file '" + path + "'");
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    line = trim(line.substr(0, line.find('#')));
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw std::invalid_argument(path + ":" + std::to_string(lineno) + ": expected key = value, got '" + line + "'");
    }
    base.set(trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
  }
  return base;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& [n, f] : runners()) v.push_back(n);
    return v;
  }();
  return names;
}

CheckReport run_check(const std::string& name, const CheckOptions& options) {
  if (name == "canary") {
    return timed(name, [] {
      CheckReport r;
      r.add("canary/always-fails", false, "deliberate failure");
      return r;
    });
  }
  for (const auto& [n, f] : runners()) {
    if (n == name) return timed(n, [&] { return f(options); });
  }
  throw std::invalid_argument("unknown check '" + name + "'");
}

std::vector<CheckReport> run_all(const CheckOptions& options) {
  std::vector<std::future<CheckReport>> jobs;
  for (const auto& name : suite_names()) {
    jobs.push_back(std::async(std::launch::async, [&options, name] { return run_check(name, options); }));
  }
  std::vector<CheckReport> out;
  for (auto& j : jobs) out.push_back(j.get());
  return out;
}

CheckReport michel_report(int n, int d) {
  return timed("michel", [&] {
    CheckReport r;
    for (const auto& c : michel_identity_A(n, d)) {
      r.add(c.lambda.str(), c.pass(), "|chi(w_d)|^2 = " + to_string(c.lhs) + ", rhs = " + to_string(c.rhs));
    }
    return r;
  });
}

CheckReport filtration_report(int n, int d) {
  return timed("filtration", [&] {
    CheckReport r;
    for (const auto& c : check_filtration_conjecture(n, d).cases) {
      r.add((c.core.empty() ? "empty" : c.core) + "/j" + pad2(c.j), c.pass,
            "dim F_j = " + std::to_string(c.source_dim) + ", image rank " + std::to_string(c.target_rank) +
                (c.detail.empty() ? "" : ", " + c.detail));
    }
    return r;
  });
}

std::vector<std::vector<Integer>> frobenius_table(int n) {
  if (n < 1 || n > 8) throw DomainError("frobenius_table needs 1 <= n <= 8");
  const auto parts = partitions_of(n);
  using Mono = std::vector<int>;
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  // sigma(delta) with its sign, delta = (n-1, ..., 0).
  std::vector<std::pair<Mono, int>> alternant;
  do {
    Mono m(n);
    for (int i = 0; i < n; ++i) m[i] = n - 1 - perm[i];
    int inv = 0;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) inv += perm[i] > perm[j];
    }
    alternant.push_back({m, inv % 2 ? -1 : 1});
  } while (std::next_permutation(perm.begin(), perm.end()));

  std::vector<std::vector<Integer>> table(parts.size(), std::vector<Integer>(parts.size(), 0));
  for (size_t j = 0; j < parts.size(); ++j) {
    std::map<Mono, Integer> p{{Mono(n, 0), 1}};
    for (int part : parts[j].parts()) {
      std::map<Mono, Integer> next;
      for (const auto& [m, c] : p) {
        for (int v = 0; v < n; ++v) {
          Mono m2 = m;
          m2[v] += part;
          next[m2] += c;
        }
      }
      p.swap(next);
    }
    for (size_t i = 0; i < parts.size(); ++i) {
      Mono target(n);
      for (int v = 0; v < n; ++v) target[v] = parts[i][v] + n - 1 - v;
      Integer sum = 0;
      for (const auto& [m, s] : alternant) {
        Mono need(n);
        bool ok = true;
        for (int v = 0; v < n && ok; ++v) {
          need[v] = target[v] - m[v];
          ok = need[v] >= 0;
        }
        if (!ok) continue;
        auto it = p.find(need);
        if (it != p.end()) sum += s * it->second;
      }
      table[i][j] = sum;
    }
  }
  return table;
}

}  // namespace cmspets
