#include "cmspets/partition.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace cmspets {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw ShapeError("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) throw ShapeError("partition parts must not increase");
    size_ += parts_[i];
  }
}

Partition Partition::parse(std::string_view text) {
  std::vector<int> parts;
  std::string s(text);
  s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); }),
          s.end());
  if (s.empty()) return Partition();
  std::stringstream in(s);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(tok, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad partition part '" + tok + "'");
    }
    if (used != tok.size()) throw std::invalid_argument("bad partition part '" + tok + "'");
    parts.push_back(v);
  }
  if (!parts.empty() && parts.back() == 0) throw ShapeError("partition parts must be positive");
  return Partition(std::move(parts));
}

Partition Partition::conjugate() const {
  std::vector<int> c(parts_.empty() ? 0 : parts_[0], 0);
  for (int p : parts_) {
    for (int j = 0; j < p; ++j) ++c[j];
  }
  return Partition(std::move(c));
}

std::string Partition::str() const {
  std::string out;
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(parts_[i]);
  }
  return out;
}

MultiPartition MultiPartition::parse(std::string_view text) {
  std::vector<Partition> comps;
  size_t start = 0;
  for (;;) {
    size_t bar = text.find('|', start);
    comps.push_back(Partition::parse(text.substr(start, bar == std::string_view::npos
                                                            ? std::string_view::npos
                                                            : bar - start)));
    if (bar == std::string_view::npos) break;
    start = bar + 1;
  }
  return MultiPartition(std::move(comps));
}

int MultiPartition::size() const {
  int s = 0;
  for (const auto& c : comps_) s += c.size();
  return s;
}

std::string MultiPartition::str() const {
  std::string out;
  for (size_t i = 0; i < comps_.size(); ++i) {
    if (i) out += "|";
    out += comps_[i].str();
  }
  return out;
}

std::vector<Partition> partitions_of(int n) {
  if (n < 0) throw DomainError("negative partition size");
  std::vector<Partition> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int left, int maxp) {
    if (left == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int p = std::min(left, maxp); p >= 1; --p) {
      cur.push_back(p);
      rec(left - p, p);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

long partition_count(int n) {
  std::vector<long> c(n + 1, 0);
  c[0] = 1;
  for (int p = 1; p <= n; ++p) {
    for (int s = p; s <= n; ++s) c[s] += c[s - p];
  }
  return c[n];
}

std::vector<MultiPartition> multipartitions_of(int d, int r) {
  if (d < 1) throw DomainError("multipartition arity must be positive");
  std::vector<MultiPartition> out;
  std::vector<std::vector<Partition>> cache(r + 1);
  for (int s = 0; s <= r; ++s) cache[s] = partitions_of(s);
  std::vector<Partition> cur;
  std::function<void(int, int)> rec = [&](int idx, int left) {
    if (idx == d - 1) {
      for (const auto& p : cache[left]) {
        cur.push_back(p);
        out.emplace_back(cur);
        cur.pop_back();
      }
      return;
    }
    for (int s = left; s >= 0; --s) {
      for (const auto& p : cache[s]) {
        cur.push_back(p);
        rec(idx + 1, left - s);
        cur.pop_back();
      }
    }
  };
  rec(0, r);
  return out;
}

std::vector<int> hooks(const Partition& p) {
  const Partition c = p.conjugate();
  std::vector<int> out;
  out.reserve(p.size());
  for (int i = 0; i < p.length(); ++i) {
    for (int j = 0; j < p[i]; ++j) out.push_back(p[i] - j + c[j] - i - 1);
  }
  return out;
}

int a_invariant(const Partition& p) {
  int a = 0;
  for (int k = 0; k < p.length(); ++k) a += k * p[k];
  return a;
}

Integer standard_tableaux(const Partition& p) {
  Integer num = 1;
  for (int k = 2; k <= p.size(); ++k) num *= k;
  Integer den = 1;
  for (int h : hooks(p)) den *= h;
  return num / den;
}

Integer multitableaux(const MultiPartition& m) {
  Integer result = 1;
  for (int k = 2; k <= m.size(); ++k) result *= k;
  for (const auto& c : m.components()) {
    Integer f = 1;
    for (int k = 2; k <= c.size(); ++k) f *= k;
    result /= f;
    result *= standard_tableaux(c);
  }
  return result;
}

bool is_d_core(const Partition& p, int d) {
  if (d < 1) throw DomainError("d must be positive");
  const auto hs = hooks(p);
  const bool no_equal = std::none_of(hs.begin(), hs.end(), [d](int h) { return h == d; });
  const bool no_multiple = std::none_of(hs.begin(), hs.end(), [d](int h) { return h % d == 0; });
  if (no_equal != no_multiple) throw std::logic_error("hook characterisations of d-cores disagree");
  return no_equal;
}

std::vector<int> beta_set(const Partition& p, int length) {
  if (length < p.length()) throw DomainError("beta set shorter than the partition");
  std::vector<int> out(length);
  for (int i = 0; i < length; ++i) out[i] = p[i] + length - 1 - i;
  return out;
}

Partition from_beta_set(std::vector<int> beads) {
  std::sort(beads.rbegin(), beads.rend());
  const int L = static_cast<int>(beads.size());
  std::vector<int> parts(L);
  for (int i = 0; i < L; ++i) {
    if (i > 0 && beads[i] == beads[i - 1]) throw ShapeError("beta set has repeated beads");
    if (beads[i] < 0) throw ShapeError("negative bead position");
    parts[i] = beads[i] - (L - 1 - i);
  }
  return Partition(std::move(parts));
}

Abacus abacus(const Partition& p, int d, int length) {
  if (d < 1) throw DomainError("d must be positive");
  if (length < 0) length = p.length();
  if (length < p.length() || (length - p.length()) % d != 0) {
    throw DomainError("abacus length must be length(p) + a multiple of d");
  }
  Abacus a;
  a.d = d;
  a.length = length;
  a.beads = beta_set(p, length);
  std::sort(a.beads.begin(), a.beads.end());
  a.runner_counts.assign(d, 0);
  for (int x : a.beads) ++a.runner_counts[x % d];
  a.b.resize(d);
  for (int j = 0; j < d; ++j) a.b[j] = a.runner_counts[j] - a.runner_counts[0];
  a.first_gap = length - p.length();
  if (a.first_gap % d != 0) throw std::logic_error("abacus not normalised");
  return a;
}

std::vector<int> residues(const Partition& p, int d) {
  if (d < 1) throw DomainError("d must be positive");
  std::vector<int> rho(d, 0);
  for (int r = 0; r < p.length(); ++r) {
    for (int c = 0; c < p[r]; ++c) ++rho[(((r - c) % d) + d) % d];
  }
  return rho;
}

namespace {

Partition core_from_counts(const std::vector<int>& counts, int d) {
  std::vector<int> beads;
  for (int j = 0; j < d; ++j) {
    for (int t = 0; t < counts[j]; ++t) beads.push_back(j + d * t);
  }
  return from_beta_set(std::move(beads));
}

}  // namespace

Partition d_core(const Partition& p, int d) {
  if (d < 1) throw DomainError("d must be positive");
  std::vector<int> counts(d, 0);
  for (int x : beta_set(p, p.length())) ++counts[x % d];
  return core_from_counts(counts, d);
}

CoreQuotient core_quotient(const Partition& p, int d) {
  CoreQuotient out;
  out.core = d_core(p, d);
  int L = p.length();
  while ((L - out.core.length()) % d != 0) ++L;
  std::vector<std::vector<int>> levels(d);
  for (int x : beta_set(p, L)) levels[x % d].push_back(x / d);
  std::vector<Partition> comps;
  comps.reserve(d);
  for (auto& lv : levels) comps.push_back(from_beta_set(std::move(lv)));
  out.quotient = MultiPartition(std::move(comps));
  return out;
}

Partition par_d(const Partition& core, const MultiPartition& quotient) {
  const int d = quotient.arity();
  if (d < 1) throw ShapeError("quotient must have at least one component");
  if (!is_d_core(core, d)) throw DomainError(core.str() + " is not a " + std::to_string(d) + "-core");
  int L = core.length();
  std::vector<int> counts;
  for (;;) {
    counts.assign(d, 0);
    for (int x : beta_set(core, L)) ++counts[x % d];
    bool fits = true;
    for (int i = 0; i < d; ++i) fits = fits && counts[i] >= quotient[i].length();
    if (fits) break;
    L += d;
  }
  std::vector<int> beads;
  for (int i = 0; i < d; ++i) {
    for (int lv : beta_set(quotient[i], counts[i])) beads.push_back(i + d * lv);
  }
  return from_beta_set(std::move(beads));
}

std::vector<RimHookRemoval> remove_rim_hooks(const Partition& p, int len) {
  if (len < 1) throw DomainError("rim hook length must be positive");
  std::vector<RimHookRemoval> out;
  const auto beads = beta_set(p, p.length());
  std::vector<bool> occupied(beads.empty() ? 0 : beads.front() + 1, false);
  for (int x : beads) occupied[x] = true;
  for (size_t i = 0; i < beads.size(); ++i) {
    const int x = beads[i];
    const int y = x - len;
    if (y < 0 || occupied[y]) continue;
    int height = 0;
    for (int z = y + 1; z < x; ++z) height += occupied[z];
    std::vector<int> moved = beads;
    moved[i] = y;
    out.push_back({from_beta_set(std::move(moved)), height});
  }
  return out;
}

CoreData k_l_sequences(const Partition& core, int d) {
  if (!is_d_core(core, d)) throw DomainError(core.str() + " is not a " + std::to_string(d) + "-core");
  CoreData data;
  data.core = core;
  data.d = d;
  data.b = abacus(core, d).b;
  data.rho = residues(core, d);
  auto rho = [&](int i) { return data.rho[((i % d) + d) % d]; };
  const int sum_b = std::accumulate(data.b.begin(), data.b.end(), 0);
  data.k.resize(d);
  data.l.resize(d);
  for (int j = 0; j < d; ++j) data.k[j] = d * data.b[j] + j;
  data.l[0] = sum_b + d * (rho(1) - rho(0)) + d - 1;
  for (int j = 1; j < d; ++j) data.l[j] = sum_b + d * (rho(1 - j) - rho(-j)) + j - 1;
  return data;
}

bool check_k_equals_l(const CoreData& data) {
  const int d = data.d;
  const int m = data.core.length();
  for (int j = 0; j < d; ++j) {
    const int idx = (((j + 1 - m) % d) + d) % d;
    if (data.k[j] != data.l[idx]) return false;
  }
  return true;
}

std::vector<Partition> d_cores_up_to(int d, int max_size) {
  std::vector<Partition> out;
  for (int n = 0; n <= max_size; ++n) {
    for (auto& p : partitions_of(n)) {
      if (is_d_core(p, d)) out.push_back(std::move(p));
    }
  }
  return out;
}

}  // namespace cmspets
