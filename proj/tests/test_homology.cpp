#include <catch_amalgamated.hpp>

#include "support.hpp"
#include "witt/errors.hpp"

using namespace witt;

namespace {

Chain random_cochain(const SimplicialComplex& x, int k, std::mt19937_64& rng) {
  Chain c;
  c.degree = k;
  c.coefficients.resize(x.count(k));
  for (auto& v : c.coefficients) v = static_cast<std::int64_t>(rng() & 1);
  return c;
}

Chain add_f2(const Chain& a, const Chain& b) {
  Chain c = a;
  for (std::size_t i = 0; i < c.coefficients.size(); ++i) c.coefficients[i] = (a.coefficients[i] + b.coefficients[i]) & 1;
  return c;
}

}  // namespace

TEST_CASE("integral homology of catalogue spaces") {
  auto rp2 = homology(support::rp2_6(), CoefficientSpec::integers());
  CHECK(rp2.betti == std::vector<long>{1, 0, 0});
  CHECK(rp2.torsion[1] == std::vector<std::uint64_t>{2});
  CHECK(rp2.torsion[0].empty());

  auto cp2 = standard_space("cp2");
  CHECK(cp2.count(0) == 9);
  auto h = homology(cp2, CoefficientSpec::integers());
  CHECK(h.betti == std::vector<long>{1, 0, 1, 0, 1});
  CHECK(h.euler_characteristic() == 3);
  CHECK(support::euler_from_f_vector(cp2) == 3);

  auto k = homology(standard_space("klein"), CoefficientSpec::integers());
  CHECK(k.betti == std::vector<long>{1, 1, 0});
  CHECK(k.torsion[1] == std::vector<std::uint64_t>{2});

  auto rp3 = homology(standard_space("rp3"), CoefficientSpec::integers());
  CHECK(rp3.betti == std::vector<long>{1, 0, 0, 1});
  CHECK(rp3.torsion[1] == std::vector<std::uint64_t>{2});
}

TEST_CASE("spheres over every field") {
  for (int n = 1; n <= 4; ++n) {
    auto s = support::boundary_of_simplex(n);
    for (auto c : {CoefficientSpec::f2(), CoefficientSpec::prime_field(3), CoefficientSpec::rationals(),
                   CoefficientSpec::integers()}) {
      auto h = homology(s, c);
      for (int k = 0; k <= n; ++k) CHECK(h.dim(k) == ((k == 0 || k == n) ? 1 : 0));
    }
  }
}

TEST_CASE("field homology agrees with the dense oracle") {
  for (const auto& x : {support::rp2_6(), support::torus7(), standard_space("klein"), support::pinched_torus(),
                        standard_space("rp3"), support::wedge_of_spheres(3)}) {
    CHECK(homology(x, CoefficientSpec::f2()).betti == support::f2_betti(x));
  }
}

TEST_CASE("relative homology of the prism") {
  auto m = product(support::torus7(), build_complex({{0, 1}}));
  auto dm = boundary_subcomplex(m);
  auto rel = relative_homology(m, dm, CoefficientSpec::f2());
  CHECK(rel.betti == support::f2_betti(m, dm));
  CHECK(rel.dim(3) == 1);
  auto fc = fundamental_class(m, CoefficientSpec::f2());
  CHECK(fc.degree == 3);
  // the relative fundamental class is not a relative boundary: it pairs to 1 with a relative cocycle
  auto co = relative_cohomology(m, dm, CoefficientSpec::f2());
  REQUIRE(co.representatives[3].size() == 1);
  CHECK(evaluate(co.representatives[3][0], fc, CoefficientSpec::f2()) == 1);
}

TEST_CASE("uct predictions") {
  auto rp2 = homology(support::rp2_6(), CoefficientSpec::integers());
  CHECK(uct_prediction(rp2, 1) == 1);
  CHECK(uct_prediction(rp2, 2) == 1);
  CHECK(uct_prediction(rp2, 1, 3) == 0);
  auto k = homology(standard_space("klein"), CoefficientSpec::integers());
  CHECK(uct_prediction(k, 1) == 2);
  CHECK(homology(standard_space("klein"), CoefficientSpec::f2()).dim(1) == 2);
}

TEST_CASE("bocksteins") {
  auto rp2 = support::rp2_6();
  auto bh = bockstein(rp2, 1, BocksteinVariant::Homology);
  REQUIRE(bh.size() == 1);
  CHECK(bh[0] == std::vector<int>{0});
  auto bc = bockstein(rp2, 1, BocksteinVariant::Cohomology);
  REQUIRE(bc.size() == 1);
  CHECK(bc[0] == std::vector<int>{1});
  // on a 2-torsion-free space the Bockstein vanishes
  for (auto row : bockstein(support::torus7(), 1, BocksteinVariant::Cohomology))
    for (int e : row) CHECK(e == 0);
}

TEST_CASE("Bockstein squares to zero") {
  for (const auto& name : {"rp2", "rp3", "klein", "torus", "cp2"}) {
    auto x = standard_space(name);
    for (auto variant : {BocksteinVariant::Homology, BocksteinVariant::Cohomology}) {
      for (int k = 0; k <= x.dimension(); ++k) {
        const int mid = variant == BocksteinVariant::Homology ? k - 1 : k + 1;
        if (mid < 0 || mid > x.dimension()) continue;
        auto first = bockstein(x, k, variant);
        auto second = bockstein(x, mid, variant);
        if (first.empty() || second.empty() || first[0].empty()) continue;
        for (std::size_t i = 0; i < second.size(); ++i)
          for (std::size_t j = 0; j < first[0].size(); ++j) {
            int s = 0;
            for (std::size_t m = 0; m < first.size(); ++m) s ^= second[i][m] & first[m][j];
            CHECK(s == 0);
          }
      }
    }
  }
}

TEST_CASE("cup products") {
  const auto f2 = CoefficientSpec::f2();
  auto rp2 = support::rp2_6();
  auto co = cohomology(rp2, f2);
  REQUIRE(co.representatives[1].size() == 1);
  const auto& a = co.representatives[1][0];
  auto sq = cup_product(rp2, a, a, f2);
  CHECK_FALSE(sq.overflow);
  CHECK(evaluate(sq.cochain, fundamental_class(rp2, f2), f2) == 1);
  CHECK(cup_product(rp2, sq.cochain, a, f2).overflow);

  // unit
  Chain one;
  one.degree = 0;
  one.coefficients.assign(rp2.count(0), 1);
  CHECK(cup_product(rp2, one, a, f2).cochain.coefficients == a.coefficients);

  // graded commutativity up to coboundary on T2: a 2-cochain on a closed connected
  // surface is a coboundary over F2 exactly when it sums to zero on the facets
  auto t = support::torus7();
  auto ct = cohomology(t, f2);
  auto fc = fundamental_class(t, f2);
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 10; ++trial) {
    Chain alpha = coboundary(t, random_cochain(t, 0, rng), f2);
    Chain beta = coboundary(t, random_cochain(t, 0, rng), f2);
    for (const auto& r : ct.representatives[1]) {
      if (rng() & 1) alpha = add_f2(alpha, r);
      if (rng() & 1) beta = add_f2(beta, r);
    }
    auto ab = cup_product(t, alpha, beta, f2).cochain;
    auto ba = cup_product(t, beta, alpha, f2).cochain;
    CHECK(evaluate(add_f2(ab, ba), fc, f2) == 0);
    CHECK(coboundary(t, ab, f2).is_zero());
  }
}

TEST_CASE("chain level identities") {
  const auto f2 = CoefficientSpec::f2();
  auto t = support::torus7();
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 5; ++trial) {
    auto z = random_cochain(t, 2, rng);
    CHECK(boundary(t, boundary(t, z, f2), f2).is_zero());
    auto a = random_cochain(t, 0, rng);
    CHECK(coboundary(t, coboundary(t, a, f2), f2).is_zero());
  }
  // over Z
  auto cp2 = standard_space("cp2");
  Chain z;
  z.degree = 3;
  z.coefficients.resize(cp2.count(3));
  for (auto& c : z.coefficients) c = static_cast<std::int64_t>(rng() % 7) - 3;
  CHECK(boundary(cp2, boundary(cp2, z, CoefficientSpec::integers()), CoefficientSpec::integers()).is_zero());

  // cap Leibniz against a cycle over F2: d(z cap a) = z cap da
  auto fc = fundamental_class(t, f2);
  for (int trial = 0; trial < 5; ++trial) {
    auto a = random_cochain(t, 1, rng);
    auto lhs = boundary(t, cap_product(t, a, fc, f2), f2);
    auto rhs = cap_product(t, coboundary(t, a, f2), fc, f2);
    CHECK(lhs.coefficients == rhs.coefficients);
  }
}

TEST_CASE("fundamental classes") {
  auto s2 = support::boundary_of_simplex(2);
  auto f = fundamental_class(s2, CoefficientSpec::f2());
  CHECK(std::count(f.coefficients.begin(), f.coefficients.end(), 1) == 4);
  auto rp2 = support::rp2_6();
  auto g = fundamental_class(rp2, CoefficientSpec::f2());
  CHECK(std::count(g.coefficients.begin(), g.coefficients.end(), 1) == 10);
  CHECK(boundary(rp2, g, CoefficientSpec::f2()).is_zero());
  CHECK_THROWS_AS(fundamental_class(rp2, CoefficientSpec::integers()), ValidationError);
  auto t = fundamental_class(support::torus7(), CoefficientSpec::integers());
  CHECK(boundary(support::torus7(), t, CoefficientSpec::integers()).is_zero());
}

TEST_CASE("smith normal form") {
  std::vector<std::vector<std::pair<std::uint32_t, long>>> cols = {{{0, 2}}, {{1, 3}}};
  auto f = diagonal_factors(2, cols);
  REQUIRE(f.size() == 2);
  CHECK(f[0] * f[1] == 6);
  CHECK(elementary_divisors(f) == std::vector<std::uint64_t>{2, 3});
  // [[4,6],[6,4]] has determinant -20 and gcd of entries 2: Z/2 + Z/10
  std::vector<std::vector<std::pair<std::uint32_t, long>>> big = {{{0, 4}, {1, 6}}, {{0, 6}, {1, 4}}};
  auto g = diagonal_factors(2, big);
  REQUIRE(g.size() == 2);
  CHECK(abs(g[0] * g[1]) == 20);
  CHECK(elementary_divisors(g) == std::vector<std::uint64_t>{2, 2, 5});
  // rank deficiency
  std::vector<std::vector<std::pair<std::uint32_t, long>>> dep = {{{0, 1}, {1, 1}}, {{0, 2}, {1, 2}}};
  CHECK(diagonal_factors(2, dep).size() == 1);
}
