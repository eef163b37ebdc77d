#include "doctest.h"
#include "cmspets/cmgeom.hpp"

using namespace cmspets;

TEST_CASE("cyclic Calogero-Moser spaces") {
  const CyclicCMSpace s = cyclic_cm(4, {3, 0, 1, 0});
  CHECK(s.roots == RootMultiset{{0, 2}, {4, 1}, {12, 1}});
  CHECK(s.f().degree() == 4);
  const SingularityReport r = singularity_report(s);
  CHECK(r.fixed_points.size() == 3);
  REQUIRE(r.singular.size() == 1);
  CHECK(r.singular[0].z == 0);
  CHECK(r.singular[0].type == "A_1");
  CHECK(singularity_report(cyclic_cm(3, {0, 1, 2})).singular.empty());
  CHECK_THROWS_AS(cyclic_cm(3, {1, 0}), ShapeError);
  CHECK(has_root_multiset(s.f(), s.roots));
  CHECK(!has_root_multiset(s.f(), RootMultiset{{0, 1}, {4, 1}, {12, 1}}));
}

TEST_CASE("isomorphism up to affine maps") {
  const auto a = cyclic_cm(4, {3, 0, 1, 0});
  const auto rotated = cyclic_cm(4, {0, 1, 0, 3});
  const auto iso = iso_up_to_affine(a, rotated);
  REQUIRE(iso);
  CHECK(iso->alpha == 1);
  CHECK(iso->beta == 0);
  CHECK(iso_up_to_affine(a, cyclic_cm(4, {4, 1, 2, 1}))->beta == 4);
  CHECK(!iso_up_to_affine(RootMultiset{{0, 1}, {1, 1}, {2, 1}}, RootMultiset{{0, 1}, {1, 1}, {3, 1}}));
  CHECK(!iso_up_to_affine(RootMultiset{{0, 2}, {1, 1}}, RootMultiset{{0, 3}}));
  // z -> 1 - z carries {0,0,1} onto {1,1,0}.
  const auto flip = iso_up_to_affine(RootMultiset{{0, 2}, {1, 1}}, RootMultiset{{0, 1}, {1, 2}});
  REQUIRE(flip);
  CHECK(flip->alpha == -1);
  CHECK(flip->beta == 1);
  CHECK(flip->str() == "-z + 1");
}

TEST_CASE("rank 2 fixed varieties") {
  for (GroupKind kind : {GroupKind::B2, GroupKind::G2}) {
    for (const auto& l : rank2_fixed_check(kind)) {
      INFO(l.id << ": " << l.detail);
      CHECK(l.pass);
    }
  }
  CHECK(cyclic_cm(rank2_datum(GroupKind::B2).second).roots == RootMultiset{{0, 1}, {4, 2}, {8, 1}});
  CHECK_THROWS(rank2_fixed_check(GroupKind::G4));
}

TEST_CASE("the G4 presentation") {
  const auto& p = g4_presentation();
  REQUIRE(p.equations.size() == 10);
  for (size_t i = 0; i < p.equations.size(); ++i) {
    CHECK(p.equations[i].weighted_degree(p.weights) == std::optional<int>(p.equation_weights[i]));
  }
  for (const auto& l : g4_point_checks()) {
    INFO(l.id << ": " << l.detail);
    CHECK(l.pass);
  }
  const auto pts = g4_fixed_points();
  REQUIRE(pts.size() == 4);
  CHECK(pts[0].c() == 468);
  CHECK(pts[2].c() == -45);
  CHECK(pts[3].e() == -4);
}

TEST_CASE("equation 3 as printed fails the S4 embedding") {
  const auto& vars = g4_presentation().variables;
  const Surface s = g4_surface(4);
  const MultiPoly printed =
      MultiPoly::parse("3*a^2*e - 2*b*x2 + 8*c*x1 - 9*x1*e^3 - 108*x1*e", vars);
  MultiPoly r = printed;
  for (const char* v : {"x2", "y2", "a", "b"}) r = r.substitute(v, Rational(0));
  r = r.substitute("c", MultiPoly::from_uni(vars, "e", s.c_of_e));
  CHECK(!r.is_zero());
  // The fixed points cannot tell the two signs apart.
  for (const auto& pt : g4_fixed_points()) CHECK(is_zero(printed.evaluate(pt.coords)));
}

TEST_CASE("mu_d loci and surfaces") {
  CHECK(mu_d_locus(4).survivors == std::vector<std::string>{"x1", "y1", "c", "e"});
  CHECK(mu_d_locus(6).survivors == std::vector<std::string>{"x2", "y2", "c", "e"});
  CHECK_THROWS(mu_d_locus(3));
  for (int d : {1, 4, 6}) {
    for (const auto& l : g4_surface_checks(d)) {
      INFO(l.id << ": " << l.detail);
      CHECK(l.pass);
    }
  }
  for (int d : {4, 6}) {
    for (const auto& l : g4_series_geometry_crosscheck(d)) {
      INFO(l.id << ": " << l.detail);
      CHECK(l.pass);
    }
  }
  for (const auto& l : g4_euler_observation()) CHECK(l.pass);
  CHECK(g4_surface(6).rhs() == from_roots(RootMultiset{{8, 1}, {2, 2}, {-4, 3}}));
  CHECK_THROWS(g4_surface(2));
}
