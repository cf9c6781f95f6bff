#include <catch_amalgamated.hpp>

#include <functional>

#include "support.hpp"
#include "witt/pairings.hpp"

using namespace witt;

namespace {

std::mt19937_64& rng() {
  static std::mt19937_64 r(20240601);
  return r;
}

// Generators.

SimplicialComplex random_surface() {
  const char* names[] = {"sphere(2)", "torus", "rp2", "klein", "genus(2)"};
  auto x = standard_space(names[rng()() % 5]);
  if (rng()() % 2) x = connected_sum(x, standard_space(names[rng()() % 4]));
  return map_vertices(x, support::random_relabeling(x, rng()));
}

SimplicialComplex random_closed() {
  std::vector<std::function<SimplicialComplex()>> pool = {
      [] { return random_surface(); },
      [] { return standard_space("rp3"); },
      [] { return standard_space("sphere(3)"); },
      [] { return suspension(support::torus7()); },
      [] { return support::wedge_of_spheres(2 + static_cast<int>(rng()() % 2)); },
      [] { return support::pinched_torus(); },
      [] { return product(support::boundary_of_simplex(1), support::boundary_of_simplex(1)); },
  };
  auto x = pool[rng()() % pool.size()]();
  return map_vertices(x, support::random_relabeling(x, rng()));
}

SymmetricForm random_form(std::size_t n) {
  std::vector<std::vector<std::int64_t>> g(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) g[i][j] = g[j][i] = static_cast<std::int64_t>(rng()() & 1);
  return SymmetricForm(g);
}

std::vector<long> ih_dims(const StratifiedSpace& s) {
  return intersection_homology(s, middle_perversity(s.dimension()), CoefficientSpec::f2()).dims;
}

constexpr int kTrials = 12;

}  // namespace

TEST_CASE("homology and IH are invariant under relabeling") {
  for (int t = 0; t < kTrials; ++t) {
    auto x = random_closed();
    auto y = map_vertices(x, support::random_relabeling(x, rng()));
    CHECK(homology(x, CoefficientSpec::integers()).betti == homology(y, CoefficientSpec::integers()).betti);
    CHECK(homology(x, CoefficientSpec::integers()).torsion == homology(y, CoefficientSpec::integers()).torsion);
    auto sx = candidate_stratification(x).space, sy = candidate_stratification(y).space;
    CHECK(sx.singular_set().count(0) == sy.singular_set().count(0));
    CHECK(ih_dims(sx) == ih_dims(sy));
    CHECK(is_witt_space(sx, CoefficientSpec::f2(), OrientationMode::Z2).witt ==
          is_witt_space(sy, CoefficientSpec::f2(), OrientationMode::Z2).witt);
  }
}

TEST_CASE("links in closed pseudomanifolds are closed pseudomanifolds") {
  for (int t = 0; t < kTrials; ++t) {
    auto x = random_closed();
    for (int d = 0; d < x.dimension(); ++d) {
      const std::size_t i = rng()() % x.count(d);
      auto l = link(x, x.simplex(d, i));
      CHECK(l.dimension() == x.dimension() - d - 1);
      CHECK(is_pseudomanifold(l, true).ok);
    }
  }
}

TEST_CASE("orientability is invariant under subdivision") {
  for (int t = 0; t < kTrials; ++t) {
    auto x = random_surface();
    CHECK(orient(x).orientable() == orient(barycentric_subdivision(x).complex).orientable());
    CHECK(orient(x).orientable() == (homology(x, CoefficientSpec::integers()).dim(2) == 1));
  }
}

TEST_CASE("Euler characteristic is multiplicative on products") {
  for (int t = 0; t < 6; ++t) {
    auto x = random_surface();
    auto y = (t % 2) ? support::boundary_of_simplex(1) : support::rp2_6();
    CHECK(support::euler_from_f_vector(product(x, y)) == support::euler_from_f_vector(x) * support::euler_from_f_vector(y));
  }
}

TEST_CASE("gluing points creates exactly the glued singular vertices") {
  for (int t = 0; t < kTrials; ++t) {
    auto a = barycentric_subdivision(random_surface()).complex;
    auto b = barycentric_subdivision(random_surface()).complex;
    auto u = disjoint_union(a, b);
    // original vertices of the subdivisions have disjoint stars
    const Vertex va = 0, vb = static_cast<Vertex>(a.count(0));
    auto g = glue_at_points(u, {{va, vb}});
    auto sing = candidate_stratification(g).space.singular_set();
    CHECK(sing.count(0) == 1);
    CHECK(sing.dimension() == 0);
    CHECK(g.euler_characteristic() == u.euler_characteristic() - 1);
  }
}

TEST_CASE("boundary of a boundary vanishes") {
  for (int t = 0; t < kTrials; ++t) {
    auto x = random_closed();
    ChainComplex cc(x);
    PrimeField f{3};
    for (int k = 2; k <= x.dimension(); ++k) {
      auto outer = cc.boundary_columns(f, k);
      auto inner = cc.boundary_columns(f, k - 1);
      for (const auto& col : outer) {
        std::map<std::uint32_t, std::int64_t> acc;
        for (auto [r, v] : col)
          for (auto [r2, v2] : inner[r]) acc[r2] += static_cast<std::int64_t>(v) * v2;
        for (auto [r2, s] : acc) CHECK(s % 3 == 0);
      }
    }
  }
}

TEST_CASE("field homology matches the universal coefficient prediction") {
  for (const auto& name : catalogue_names()) {
    if (name == "sphere(6)" || name == "sphere(5)") continue;
    auto x = standard_space(name);
    auto z = homology(x, CoefficientSpec::integers());
    for (std::uint32_t p : {2u, 3u}) {
      auto h = homology(x, CoefficientSpec::prime_field(p));
      for (int k = 0; k <= x.dimension(); ++k) CHECK(h.dim(k) == uct_prediction(z, k, p));
    }
  }
}

TEST_CASE("Witt spaces satisfy duality") {
  for (int t = 0; t < kTrials; ++t) {
    auto x = random_closed();
    auto s = candidate_stratification(x).space;
    if (!is_witt_space(s, CoefficientSpec::f2(), OrientationMode::Z2).witt) continue;
    auto d = ih_dims(s);
    const int n = x.dimension();
    for (int k = 0; k <= n; ++k) CHECK(d[k] == d[n - k]);
  }
}

TEST_CASE("IH is invariant under subdivision") {
  for (int t = 0; t < 6; ++t) {
    auto x = random_closed();
    if (x.dimension() > 2) continue;
    auto s = candidate_stratification(x).space;
    auto sd = subdivide(s).space;
    CHECK(ih_dims(s) == ih_dims(sd));
    CHECK(homology(x, CoefficientSpec::f2()).betti == homology(sd.complex(), CoefficientSpec::f2()).betti);
  }
}

TEST_CASE("Kunneth within one perversity") {
  auto circle = support::boundary_of_simplex(1);
  for (const auto& x : {support::pinched_torus(), support::wedge_of_spheres(2)}) {
    auto s = candidate_stratification(x).space;
    auto p = product_with_manifold(s, circle);
    auto a = ih_dims(s);
    auto b = ih_dims(p);
    for (int k = 0; k <= 3; ++k) {
      long conv = (k <= 2 ? a[k] : 0) + (k >= 1 && k - 1 <= 2 ? a[k - 1] : 0);
      CHECK(b[k] == conv);
    }
  }
}

TEST_CASE("Witt class is a homomorphism") {
  for (int t = 0; t < 200; ++t) {
    auto f = random_form(1 + rng()() % 5);
    auto g = random_form(1 + rng()() % 5);
    CHECK(witt_class_f2(direct_sum(f, g)).bit == (witt_class_f2(f).bit ^ witt_class_f2(g).bit));
    CHECK(witt_class_f2(direct_sum(f, hyperbolic_plane())).bit == witt_class_f2(f).bit);
  }
}

TEST_CASE("split bases reproduce the block form") {
  for (int t = 0; t < 200; ++t) {
    auto f = random_form(1 + rng()() % 8);
    auto s = split_basis(f);
    if (!s.split) continue;
    CHECK(f.restrict_to(s.basis) == s.conjugated);
    CHECK(matrix_rank(s.basis, 2) == f.dim());
  }
}

TEST_CASE("isotropic vectors are missing only for the unit form") {
  for (std::size_t n = 1; n <= 6; ++n) {
    const std::size_t entries = n * (n + 1) / 2;
    const bool exhaustive = n <= 5;
    const std::uint64_t total = exhaustive ? (std::uint64_t{1} << entries) : 20000;
    for (std::uint64_t i = 0; i < total; ++i) {
      const std::uint64_t bits = exhaustive ? i : rng()() & ((std::uint64_t{1} << entries) - 1);
      std::vector<std::vector<std::int64_t>> g(n, std::vector<std::int64_t>(n, 0));
      std::size_t b = 0;
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = r; c < n; ++c, ++b) g[r][c] = g[c][r] = static_cast<std::int64_t>(bits >> b & 1);
      SymmetricForm f(g);
      if (form_rank(f) != n) continue;
      CHECK(find_isotropic(f).has_value() == !(n == 1 && f(0, 0) == 1));
    }
  }
}

TEST_CASE("lift choices do not change the isolated form") {
  auto s = candidate_stratification(support::pinched_torus()).space;
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    IsolatedFormOptions o;
    o.seed = seed;
    auto r = intersection_form_isolated(s, o);
    CHECK(r.lift_independent);
    CHECK(r.middle.form.dim() == 0);
  }
}
