#include <catch_amalgamated.hpp>

#include "support.hpp"
#include "witt/errors.hpp"
#include "witt/stratified.hpp"

using namespace witt;
using support::boundary_of_simplex;
using support::torus7;

TEST_CASE("build_complex absorbs faces and rejects bad input") {
  auto s2 = build_complex({{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
  CHECK(s2.dimension() == 2);
  CHECK(s2.facets().size() == 4);
  auto x = build_complex({{0, 1, 2}, {0, 1}});
  CHECK(x.facets().size() == 1);
  CHECK(x.facets()[0] == Simplex{0, 1, 2});
  CHECK_THROWS_AS(build_complex({{0, 1, 1}}), ValidationError);
  CHECK_THROWS_AS(build_complex({}), ValidationError);
}

TEST_CASE("RP2 face enumeration") {
  auto x = support::rp2_6();
  CHECK(x.f_vector() == std::vector<std::size_t>{6, 15, 10});
  CHECK(support::euler_from_f_vector(x) == 1);
}

TEST_CASE("links") {
  auto s2 = boundary_of_simplex(2);
  auto l = link(s2, Simplex{0});
  CHECK(l == build_complex({{1, 2}, {1, 3}, {2, 3}}));

  auto t = torus7();
  auto c = cone(t);
  const Vertex apex = 7;
  CHECK(link(c, Simplex{apex}).f_vector() == t.f_vector());

  auto w = support::wedge_of_spheres(2);
  auto lw = link(w, Simplex{0});
  auto comps = connected_components(lw);
  REQUIRE(comps.size() == 2);
  for (const auto& k : comps) {
    CHECK(k.f_vector() == std::vector<std::size_t>{3, 3});
    CHECK(is_pseudomanifold(k, true).ok);
  }
  CHECK_THROWS_AS(link(s2, Simplex{0, 9}), ValidationError);
}

TEST_CASE("pseudomanifold verdicts") {
  CHECK(is_pseudomanifold(boundary_of_simplex(3), true).ok);
  auto bad = build_complex({{0, 1, 2}, {0, 3, 4}, {5, 6}});
  auto v = is_pseudomanifold(bad, true);
  CHECK_FALSE(v.ok);
  REQUIRE(v.witness);
  CHECK(*v.witness == Simplex{5, 6});
  CHECK(is_pseudomanifold(suspension(torus7()), true).ok);
  auto disk = build_complex({{0, 1, 2}});
  CHECK_FALSE(is_pseudomanifold(disk, true).ok);
  CHECK(is_pseudomanifold(disk, false).ok);
}

TEST_CASE("boundary subcomplex") {
  auto tet = build_complex({{0, 1, 2, 3}});
  CHECK(boundary_subcomplex(tet) == boundary_of_simplex(2));
  CHECK(boundary_subcomplex(boundary_of_simplex(2)).empty());
  auto prism = product(torus7(), build_complex({{0, 1}}));
  auto b = boundary_subcomplex(prism);
  auto comps = connected_components(b);
  REQUIRE(comps.size() == 2);
  for (const auto& k : comps) CHECK(k.f_vector() == torus7().f_vector());
}

TEST_CASE("orientation") {
  CHECK(orient(boundary_of_simplex(2)).orientable());
  auto r = orient(support::rp2_6());
  CHECK_FALSE(r.orientable());
  CHECK_FALSE(r.odd_cycle.empty());
  CHECK(orient(torus7()).orientable());
}

TEST_CASE("constructions on complexes") {
  auto s = suspension(boundary_of_simplex(1));
  CHECK(s.f_vector() == std::vector<std::size_t>{5, 9, 6});
  CHECK(support::f2_betti(s) == std::vector<long>{1, 0, 1});

  auto s2 = boundary_of_simplex(2);
  auto u = disjoint_union(s2, s2);
  CHECK(u.count(0) == 8);
  auto w = glue_at_points(u, {{0, 4}});
  CHECK(w.count(0) == 7);
  CHECK(w.f_vector() == support::wedge_of_spheres(2).f_vector());
  CHECK_THROWS_AS(glue_at_points(s2, {{0, 1}}), ValidationError);

  auto c = cone(torus7());
  CHECK(c.count(0) == 8);
  CHECK(c.dimension() == 3);
}

TEST_CASE("staircase products") {
  auto sq = product(build_complex({{0, 1}}), build_complex({{0, 1}}));
  CHECK(sq.facets().size() == 2);
  auto t3 = product(torus7(), boundary_of_simplex(1));
  CHECK(t3.facets().size() == 14 * 3 * 3);
  // F2 Kunneth against separate runs on the factors
  auto rp2 = support::rp2_6();
  auto cp2 = standard_space("cp2");
  auto prod = product(rp2, cp2);
  auto a = homology(rp2, CoefficientSpec::f2()).betti;
  auto b = homology(cp2, CoefficientSpec::f2()).betti;
  auto p = homology(prod, CoefficientSpec::f2()).betti;
  REQUIRE(p.size() == 7);
  for (int k = 0; k <= 6; ++k) {
    long conv = 0;
    for (int i = 0; i <= k; ++i)
      if (i < static_cast<int>(a.size()) && k - i < static_cast<int>(b.size())) conv += a[i] * b[k - i];
    CHECK(p[k] == conv);
  }
}

TEST_CASE("barycentric subdivision") {
  auto sd = barycentric_subdivision(build_complex({{0, 1}}));
  CHECK(sd.complex.f_vector() == std::vector<std::size_t>{3, 2});
  auto rp2 = support::rp2_6();
  CHECK(support::euler_from_f_vector(barycentric_subdivision(rp2).complex) == 1);
  auto cp2 = standard_space("cp2");
  auto h = homology(cp2, CoefficientSpec::integers());
  auto hs = homology(barycentric_subdivision(cp2).complex, CoefficientSpec::integers());
  CHECK(h.betti == hs.betti);
  CHECK(h.torsion == hs.torsion);
}

TEST_CASE("stratify and candidate stratification") {
  for (const char* name : {"torus", "rp2", "cp2", "sphere(3)", "klein"}) {
    auto c = candidate_stratification(standard_space(name));
    CHECK(c.space.is_trivial());
  }
  auto st = suspension(torus7());
  auto c = candidate_stratification(st);
  CHECK(c.space.singular_set() == SimplicialComplex({Simplex{7}, Simplex{8}}));
  auto w = candidate_stratification(support::wedge_of_spheres(2));
  CHECK(w.space.singular_set() == SimplicialComplex({Simplex{0}}));

  // a codimension-one stratum is refused
  auto s2 = boundary_of_simplex(2);
  CHECK_THROWS_AS(stratify(s2, {{1, build_complex({{0, 1}})}}), ValidationError);
  // non-nested filtration
  CHECK_THROWS_AS(stratify(st, {{0, SimplicialComplex({Simplex{7}})}, {1, SimplicialComplex({Simplex{8}})}}),
                  ValidationError);
  // omitted levels inherit the declared lower skeleton
  auto s = stratify(st, {{0, SimplicialComplex({Simplex{7}, Simplex{8}})}});
  CHECK(s.skeleton(1) == s.skeleton(0));
  CHECK(s.skeleton(3) == st);
}
