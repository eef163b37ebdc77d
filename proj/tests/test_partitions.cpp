#include <set>

#include "doctest.h"
#include "cmspets/partition.hpp"

using namespace cmspets;

namespace {

// Partitions of n with parts at most `max`, by plain recursion.
void brute_partitions(int n, int max, std::vector<int>& cur, std::vector<Partition>& out) {
  if (n == 0) {
    out.emplace_back(cur);
    return;
  }
  for (int p = std::min(n, max); p >= 1; --p) {
    cur.push_back(p);
    brute_partitions(n - p, p, cur, out);
    cur.pop_back();
  }
}

// Standard tableaux by removing corners.
long count_tableaux(const Partition& p) {
  if (p.size() <= 1) return 1;
  long total = 0;
  for (int i = 0; i < p.length(); ++i) {
    if (p[i] > p[i + 1]) {
      std::vector<int> parts = p.parts();
      --parts[i];
      total += count_tableaux(Partition(parts));
    }
  }
  return total;
}

// Core by stripping d-rim hooks until none is left.
Partition strip_core(Partition p, int d) {
  while (true) {
    auto r = remove_rim_hooks(p, d);
    if (r.empty()) return p;
    p = r.front().rest;
  }
}

}  // namespace

TEST_CASE("parsing and printing") {
  CHECK(Partition::parse("5,2,1").str() == "5,2,1");
  CHECK(Partition::parse("").empty());
  CHECK(Partition::parse("3,1").conjugate().str() == "2,1,1");
  CHECK_THROWS(Partition::parse("2,5"));
  CHECK_THROWS(Partition::parse("2,x"));
  CHECK(MultiPartition::parse("2,1||1").str() == "2,1||1");
  CHECK(MultiPartition::parse("2,1||1").size() == 4);
}

TEST_CASE("partition enumeration against recursion") {
  for (int n = 0; n <= 14; ++n) {
    std::vector<Partition> brute;
    std::vector<int> cur;
    brute_partitions(n, n, cur, brute);
    const auto ours = partitions_of(n);
    CHECK(ours == brute);
    CHECK(partition_count(n) == static_cast<long>(brute.size()));
  }
  CHECK(multipartitions_of(2, 2).size() == 5);
  CHECK(multipartitions_of(3, 2).size() == 9);
}

TEST_CASE("hooks and tableaux") {
  const Partition p({3, 1});
  CHECK(hooks(p) == std::vector<int>{4, 2, 1, 1});
  CHECK(a_invariant(Partition({2, 2, 1})) == 4);
  for (int n = 1; n <= 9; ++n) {
    for (const auto& l : partitions_of(n)) CHECK(standard_tableaux(l) == count_tableaux(l));
  }
  CHECK(multitableaux(MultiPartition::parse("1|1")) == 2);
}

TEST_CASE("the worked 4-core (5,2,1)") {
  const Partition g({5, 2, 1});
  CHECK(is_d_core(g, 4));
  CHECK(d_core(g, 4) == g);
  const CoreData c = k_l_sequences(g, 4);
  CHECK(c.b == std::vector<int>{0, 1, 0, 2});
  CHECK(c.rho == std::vector<int>{3, 2, 2, 1});
  CHECK(check_k_equals_l(c));
  CHECK(residues(g, 4) == std::vector<int>{3, 2, 2, 1});
  CHECK_THROWS_AS(k_l_sequences(Partition({4}), 4), DomainError);
}

TEST_CASE("beta sets and abaci") {
  const Partition p({3, 1});
  CHECK(beta_set(p, 3) == std::vector<int>{5, 2, 0});
  CHECK(from_beta_set({5, 2, 0}) == p);
  CHECK(from_beta_set({7, 4, 2, 1, 0}) == p);
  const Abacus a = abacus(p, 2, 2);
  CHECK(a.beads == std::vector<int>{1, 4});
  CHECK_THROWS_AS(abacus(p, 2, 3), DomainError);
}

TEST_CASE("core and quotient against rim hook stripping") {
  for (int n = 0; n <= 11; ++n) {
    for (int d = 1; d <= 5; ++d) {
      for (const auto& l : partitions_of(n)) {
        const CoreQuotient cq = core_quotient(l, d);
        CHECK(cq.core == strip_core(l, d));
        CHECK(l.size() == cq.core.size() + d * cq.quotient.size());
        CHECK(par_d(cq.core, cq.quotient) == l);
      }
    }
  }
  CHECK_THROWS_AS(par_d(Partition({2}), MultiPartition::parse("1|")), DomainError);
}

TEST_CASE("d-cores enumerated two ways") {
  for (int d = 2; d <= 5; ++d) {
    std::set<Partition> expected;
    for (int n = 0; n <= 12; ++n) {
      for (const auto& l : partitions_of(n)) {
        if (strip_core(l, d) == l) expected.insert(l);
      }
    }
    const auto cores = d_cores_up_to(d, 12);
    CHECK(std::set<Partition>(cores.begin(), cores.end()) == expected);
    CHECK(cores.size() == expected.size());
  }
}

TEST_CASE("rim hooks carry leg lengths") {
  CHECK(remove_rim_hooks(Partition({3, 1}), 3).empty());
  const auto r = remove_rim_hooks(Partition({3, 1}), 4);
  REQUIRE(r.size() == 1);
  CHECK(r[0].rest.empty());
  CHECK(r[0].height == 1);
  const auto s = remove_rim_hooks(Partition({3, 1}), 2);
  REQUIRE(s.size() == 1);
  CHECK(s[0].rest == Partition({1, 1}));
  CHECK(s[0].height == 0);
}
