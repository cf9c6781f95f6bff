#include "witt/pairings.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "witt/errors.hpp"

namespace witt {

namespace {

const PrimeField kF2{2};

std::vector<std::uint32_t> coordinates_of(const ClassBasis<PrimeField>& basis, const ChainComplex& cc, const Chain& c) {
  auto coords = basis.coordinates(to_local(cc, kF2, c));
  if (!coords) throw std::logic_error("chain is not a cycle of the complex");
  return *coords;
}

Chain all_ones(const SimplicialComplex& x, int degree) {
  return Chain{degree, std::vector<std::int64_t>(x.count(degree), 1)};
}

// ⟨α ∪ β, z⟩ over F2
std::uint32_t cup_pairing(const SimplicialComplex& x, const Chain& a, const Chain& b, const Chain& z) {
  auto cup = cup_product(x, a, b, CoefficientSpec::f2());
  return static_cast<std::uint32_t>(evaluate(cup.cochain, z, CoefficientSpec::f2()));
}

// Solves C x = b over F2 for square invertible C; nullopt if C is singular.
std::optional<FieldVector> solve_f2(const FieldMatrix& c, const FieldVector& b) {
  const std::size_t n = c.size();
  FieldMatrix aug(n, FieldVector(n + 1, 0));
  for (std::size_t i = 0; i < n; ++i) {
    if (c[i].size() != n) return std::nullopt;
    for (std::size_t j = 0; j < n; ++j) aug[i][j] = c[i][j];
    aug[i][n] = b[i];
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t r = col;
    while (r < n && !aug[r][col]) ++r;
    if (r == n) return std::nullopt;
    std::swap(aug[r], aug[col]);
    for (std::size_t o = 0; o < n; ++o)
      if (o != col && aug[o][col])
        for (std::size_t j = col; j <= n; ++j) aug[o][j] ^= aug[col][j];
  }
  FieldVector x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = aug[i][n];
  return x;
}

std::string track_of(const SimplicialComplex& x) { return orient(x).orientable() ? "z" : "z2"; }

}  // namespace

MiddleFormReport intersection_form_manifold(const SimplicialComplex& x, const ManifoldFormOptions& options) {
  auto pm = is_pseudomanifold(x, true);
  if (!pm.ok) throw ValidationError("middle form: not a closed pseudomanifold: " + pm.reason);
  const int n = x.dimension();
  if (n % 2 != 0) throw ValidationError("middle form: odd dimension " + std::to_string(n));
  if (options.verify_links) {
    auto cs = candidate_stratification(x);
    if (!cs.space.is_trivial())
      throw ValidationError("middle form: complex has singular points; use the isolated-singularity form");
  }
  const int m = n / 2;
  ChainComplex cc(x);
  auto bases = cohomology_bases(cc, kF2);
  const auto& basis = bases.degree[m];
  MiddleFormReport r;
  r.degree = m;
  r.method = "manifold";
  r.track = track_of(x);
  r.carrier = x;
  for (const auto& v : basis.representatives()) r.basis.push_back(to_global(cc, m, v));
  const auto fund = all_ones(x, n);
  const std::size_t k = r.basis.size();
  std::vector<std::vector<std::int64_t>> g(k, std::vector<std::int64_t>(k, 0));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) g[i][j] = cup_pairing(x, r.basis[i], r.basis[j], fund);
  r.form = SymmetricForm(std::move(g), 2);
  r.witt = witt_class_f2(r.form);
  return r;
}

ExteriorDecomposition exterior(const StratifiedSpace& s) {
  const auto& sing = s.singular_set();
  if (sing.dimension() > 0) throw OutOfReachError("exterior: singular set has positive-dimensional strata");
  ExteriorDecomposition e;
  auto sd1 = barycentric_subdivision(s.complex());
  auto sd2 = barycentric_subdivision(sd1.complex);
  e.subdivided = sd2.complex;
  std::set<Vertex> removed;
  for (Vertex v : sing.vertices()) {
    const Vertex v1 = *sd1.vertex_of(Simplex({v}));
    const Vertex v2 = *sd2.vertex_of(Simplex({v1}));
    e.singular.push_back(v);
    e.singular_subdivided.push_back(v2);
    removed.insert(v2);
    e.links.push_back(link(e.subdivided, Simplex({v2})));
  }
  e.m = full_subcomplex(e.subdivided, [&](Vertex v) { return !removed.count(v); });
  e.boundary = e.m.dimension() >= 1 ? boundary_subcomplex(e.m) : SimplicialComplex();
  SimplicialComplex joined;
  std::size_t link_vertices = 0;
  for (const auto& l : e.links) {
    joined = union_of(joined, l);
    link_vertices += l.count(0);
  }
  if (!(joined == e.boundary)) throw ValidationError("exterior: boundary does not match the singular links");
  if (link_vertices != joined.count(0)) throw ValidationError("exterior: singular links are not disjoint");
  if (!e.m.is_pure() || e.m.dimension() != s.dimension()) throw ValidationError("exterior: complement is not pure");
  return e;
}

ImageReport ih_middle_via_image(const StratifiedSpace& s) {
  const int n = s.dimension();
  if (n % 4 != 2) throw ValidationError("image description needs dimension 4k+2, got " + std::to_string(n));
  ImageReport r;
  r.degree = n / 2;
  const int d = r.degree;
  r.ext = exterior(s);
  const auto& m = r.ext.m;
  ChainComplex abs(m), rel(m, r.ext.boundary);
  auto habs = homology_bases(abs, kF2);
  auto hrel = homology_bases(rel, kF2);
  const auto& ba = habs.degree[d];
  const auto& br = hrel.degree[d];
  r.absolute_dim = static_cast<long>(ba.rank());
  r.relative_dim = static_cast<long>(br.rank());
  // image coordinates of each absolute generator
  FieldMatrix images;
  FieldMatrix accepted;
  for (std::size_t i = 0; i < ba.rank(); ++i) {
    auto z = to_global(abs, d, ba.representative(i));
    auto coords = br.coordinates(to_local(rel, kF2, z));
    if (!coords) throw std::logic_error("restriction of a cycle is not a relative cycle");
    images.push_back(*coords);
    FieldMatrix trial = accepted;
    trial.push_back(*coords);
    if (matrix_rank(trial, 2) == trial.size()) {
      accepted.push_back(*coords);
      r.lifts.push_back(std::move(z));
    }
  }
  r.image_dim = static_cast<long>(r.lifts.size());
  // kernel: combinations of absolute generators with zero image
  if (!images.empty()) {
    FieldMatrix transposed(br.rank(), FieldVector(images.size(), 0));
    for (std::size_t i = 0; i < images.size(); ++i)
      for (std::size_t j = 0; j < br.rank(); ++j) transposed[j][i] = images[i][j];
    r.kernel = br.rank() == 0 ? FieldMatrix() : null_space(transposed, 2);
    if (br.rank() == 0)
      for (std::size_t i = 0; i < images.size(); ++i) {
        FieldVector v(images.size(), 0);
        v[i] = 1;
        r.kernel.push_back(std::move(v));
      }
  }
  r.direct_ih_dim = intersection_homology(s, middle_perversity(n), CoefficientSpec::f2()).dim(d);
  return r;
}

IsolatedFormReport intersection_form_isolated(const StratifiedSpace& s, const IsolatedFormOptions& options) {
  IsolatedFormReport out;
  out.image = ih_middle_via_image(s);
  const auto& img = out.image;
  const auto& m = img.ext.m;
  const int n = s.dimension();
  const int d = img.degree;
  ChainComplex abs(m), rel(m, img.ext.boundary);
  auto habs = homology_bases(abs, kF2);
  auto crel = cohomology_bases(rel, kF2);
  const auto& ba = habs.degree[d];
  const auto& dual_target = habs.degree[n - d];
  const auto& ca = crel.degree[d];
  const auto fund = all_ones(m, n);
  // relative cocycles and the matrix of their caps with [M, ∂M]
  std::vector<Chain> alphas;
  for (const auto& v : ca.representatives()) alphas.push_back(to_global(rel, d, v));
  FieldMatrix c(dual_target.rank(), FieldVector(alphas.size(), 0));
  for (std::size_t j = 0; j < alphas.size(); ++j) {
    auto cap = cap_product(m, alphas[j], fund, CoefficientSpec::f2());
    auto coords = coordinates_of(dual_target, abs, cap);
    for (std::size_t i = 0; i < coords.size(); ++i) c[i][j] = coords[i];
  }
  if (c.size() != alphas.size()) throw ValidationError("duality solve fails: dimensions differ");
  auto dual_of = [&](const Chain& z) {
    auto x = solve_f2(c, coordinates_of(ba, abs, z));
    if (!x) throw ValidationError("duality solve fails: cap matrix is singular");
    Chain delta{d, std::vector<std::int64_t>(m.count(d), 0)};
    for (std::size_t j = 0; j < alphas.size(); ++j)
      if ((*x)[j])
        for (std::size_t t = 0; t < delta.coefficients.size(); ++t) delta.coefficients[t] ^= alphas[j].coefficients[t];
    return delta;
  };
  auto gram_of = [&](const std::vector<Chain>& lifts) {
    std::vector<Chain> duals;
    for (const auto& z : lifts) duals.push_back(dual_of(z));
    std::vector<std::vector<std::int64_t>> g(lifts.size(), std::vector<std::int64_t>(lifts.size()));
    for (std::size_t i = 0; i < lifts.size(); ++i)
      for (std::size_t j = 0; j < lifts.size(); ++j) g[i][j] = cup_pairing(m, duals[i], duals[j], fund);
    return std::make_pair(SymmetricForm(std::move(g), 2), duals);
  };
  auto [form, duals] = gram_of(img.lifts);
  out.middle.degree = d;
  out.middle.form = form;
  out.middle.witt = witt_class_f2(form);
  out.middle.method = "isolated";
  out.middle.track = track_of(s.complex());
  out.middle.basis = img.lifts;
  out.middle.carrier = m;

  // alternative lifts: add kernel classes and boundaries
  std::mt19937_64 rng(options.seed);
  for (int t = 0; t < options.alternate_seeds && !img.lifts.empty(); ++t) {
    std::vector<Chain> alt = img.lifts;
    for (auto& z : alt) {
      for (const auto& kv : img.kernel) {
        if (!(rng() & 1)) continue;
        for (std::size_t i = 0; i < kv.size(); ++i) {
          if (!kv[i]) continue;
          auto w = to_global(abs, d, ba.representative(i));
          for (std::size_t q = 0; q < z.coefficients.size(); ++q) z.coefficients[q] ^= w.coefficients[q];
        }
      }
      if (d + 1 <= m.dimension() && m.count(d + 1) > 0) {
        Chain c2{d + 1, std::vector<std::int64_t>(m.count(d + 1), 0)};
        for (int q = 0; q < 3; ++q) c2.coefficients[rng() % c2.coefficients.size()] ^= 1;
        auto b = boundary(m, c2, CoefficientSpec::f2());
        for (std::size_t q = 0; q < z.coefficients.size(); ++q) z.coefficients[q] = (z.coefficients[q] + b.coefficients[q]) % 2;
      }
    }
    if (!(gram_of(alt).first == form)) out.lift_independent = false;
  }

  // cup squares over every element of the image
  const std::size_t k = duals.size();
  if (k <= 20) {
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << k); ++mask) {
      Chain sum{d, std::vector<std::int64_t>(m.count(d), 0)};
      for (std::size_t i = 0; i < k; ++i)
        if (mask >> i & 1)
          for (std::size_t q = 0; q < sum.coefficients.size(); ++q) sum.coefficients[q] ^= duals[i].coefficients[q];
      ++out.cup_squares_checked;
      if (cup_pairing(m, sum, sum, fund) != 0) out.cup_squares_vanish = false;
    }
  } else {
    for (std::size_t i = 0; i < k; ++i) {
      ++out.cup_squares_checked;
      if (form(i, i) != 0) out.cup_squares_vanish = false;
    }
  }

  out.bockstein = bockstein(abs, 1, BocksteinVariant::Homology);
  for (const auto& row : out.bockstein)
    for (int v : row)
      if (v) out.bockstein_zero = false;
  return out;
}

WInvariantReport w_invariant(const StratifiedSpace& s) {
  const int n = s.dimension();
  if (n % 4 != 2) throw ValidationError("w is defined in dimensions 4k+2, got " + std::to_string(n));
  WInvariantReport r;
  if (s.is_trivial()) {
    r.middle = intersection_form_manifold(s.complex());
    r.route = "manifold";
  } else {
    if (s.singular_set().dimension() > 0)
      throw OutOfReachError("w: forms on spaces with positive-dimensional singular strata are not computed");
    auto v = is_witt_space(s, CoefficientSpec::f2(), OrientationMode::Z2);
    if (!v.witt) throw ValidationError("w: space is not an F2-Witt space");
    auto iso = intersection_form_isolated(s);
    r.middle = iso.middle;
    r.route = "isolated";
  }
  r.w = r.middle.witt;
  return r;
}

LemmaReport lemma_check(const SimplicialComplex& m) {
  LemmaReport r;
  auto pm = is_pseudomanifold(m, true);
  if (!pm.ok) throw ValidationError("lemma: not a closed pseudomanifold: " + pm.reason);
  const int n = m.dimension();
  if (n % 4 != 2) throw ValidationError("lemma: dimension must be 4k+2, got " + std::to_string(n));
  r.k = (n - 2) / 4;
  const int d = 2 * r.k + 1;
  r.orientable = orient(m).orientable();
  r.mod2_dim = homology(m, CoefficientSpec::f2()).dim(d);
  if (!r.orientable) {
    r.reason = "not orientable: dim H_" + std::to_string(d) + "(;F2) = " + std::to_string(r.mod2_dim) +
               (r.mod2_dim % 2 ? " is odd" : " is even");
    return r;
  }
  r.accepted = true;
  auto h = homology(m, CoefficientSpec::integers());
  r.betti = h.dim(d);
  r.t2_odd = h.torsion_count(d, 2);
  r.t2_even = h.torsion_count(d - 1, 2);
  r.uct_dim = uct_prediction(h, d, 2);
  r.torsion_match = r.t2_odd == r.t2_even;
  r.betti_even = r.betti % 2 == 0;
  r.parity_even = r.mod2_dim % 2 == 0;
  r.pass = r.torsion_match && r.betti_even && r.parity_even && r.uct_dim == r.mod2_dim;
  return r;
}

std::size_t product_simplex_estimate(const SimplicialComplex& x, const SimplicialComplex& y) {
  // top simplices: Σ over facet pairs of binom(p+q, p); faces bounded by 2^(p+q+1) each
  std::size_t total = 0;
  for (const auto& fx : x.facets())
    for (const auto& fy : y.facets()) {
      const int p = fx.dimension(), q = fy.dimension();
      std::size_t b = 1;
      for (int i = 1; i <= q; ++i) b = b * (p + i) / i;
      total += b << (p + q + 1);
    }
  return total;
}

ProductStabilityReport product_w_stability(const StratifiedSpace& x, const SimplicialComplex& m, const ProductOptions& options) {
  ProductStabilityReport r;
  const auto estimate = product_simplex_estimate(x.complex(), m);
  if (estimate > options.simplex_ceiling)
    throw OutOfReachError("product needs about " + std::to_string(estimate) + " simplices, above the ceiling of " +
                          std::to_string(options.simplex_ceiling));
  // IH of the factor and the product on full filtrations
  const StratifiedSpace base = x.is_trivial() ? x : subdivide(x).space;
  auto prod = product_with_manifold(base, m);
  r.product_facets = prod.complex().facets().size();
  const int n = x.dimension(), k = m.dimension();
  auto ih_x = intersection_homology(base, middle_perversity(n), CoefficientSpec::f2(), {.subdivide = false});
  auto h_m = homology(m, CoefficientSpec::f2());
  auto ih_p = intersection_homology(prod, middle_perversity(n + k), CoefficientSpec::f2(), {.subdivide = false});
  for (int deg = 0; deg <= n + k; ++deg) {
    KunnethRow row{deg, ih_p.dim(deg), 0};
    for (int a = 0; a <= deg; ++a) row.convolution += ih_x.dim(a) * h_m.dim(deg - a);
    if (row.direct != row.convolution) r.kunneth_match = false;
    r.kunneth.push_back(row);
  }
  if (n % 4 == 2 && (n + k) % 4 == 2) {
    try {
      r.w_factor = w_invariant(x).w;
      if (prod.is_trivial()) {
        r.w_product = intersection_form_manifold(prod.complex(), {.verify_links = false}).witt;
      } else {
        r.w_product = w_invariant(prod).w;
      }
    } catch (const OutOfReachError& e) {
      r.w_note = e.what();
    }
  } else {
    r.w_note = "w is defined in dimensions 4k+2; factor and product dimensions are " + std::to_string(n) + " and " +
               std::to_string(n + k);
  }
  r.pass = r.kunneth_match && (!r.w_factor || !r.w_product || *r.w_factor == *r.w_product);
  return r;
}

}  // namespace witt
