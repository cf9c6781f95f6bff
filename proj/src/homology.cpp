#include "witt/homology.hpp"

#include <algorithm>
#include <functional>

#include "witt/errors.hpp"

namespace witt {

// ------------------------------------------------------------ ChainComplex

ChainComplex::ChainComplex(const SimplicialComplex& x) : ChainComplex(x, SimplicialComplex()) {}

ChainComplex::ChainComplex(const SimplicialComplex& x, const SimplicialComplex& relative_to) : x_(x) {
  if (!x.has_subcomplex(relative_to)) throw ValidationError("relative homology: not a subcomplex");
  for (int k = 0; k <= x.dimension(); ++k) {
    globals_.emplace_back();
    locals_.emplace_back(x.count(k), -1);
    for (std::size_t g = 0; g < x.count(k); ++g) {
      if (!relative_to.empty() && relative_to.contains(x.face(k, g))) continue;
      locals_[k][g] = static_cast<long>(globals_[k].size());
      globals_[k].push_back(g);
    }
  }
}

std::size_t ChainComplex::cells(int k) const {
  return k < 0 || k > top_degree() ? 0 : globals_[k].size();
}

std::vector<std::pair<std::uint32_t, int>> ChainComplex::boundary(int k, std::size_t j) const {
  std::vector<std::pair<std::uint32_t, int>> out;
  if (k <= 0) return out;
  auto s = x_.face(k, globals_[k][j]);
  std::vector<Vertex> sub(s.size() - 1);
  for (std::size_t i = 0; i < s.size(); ++i) {
    std::size_t w = 0;
    for (std::size_t t = 0; t < s.size(); ++t)
      if (t != i) sub[w++] = s[t];
    const long loc = locals_[k - 1][*x_.index_of(sub)];
    if (loc >= 0) out.emplace_back(static_cast<std::uint32_t>(loc), i % 2 ? -1 : 1);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool Chain::is_zero() const {
  return std::all_of(coefficients.begin(), coefficients.end(), [](std::int64_t c) { return c == 0; });
}

long HomologyResult::euler_characteristic() const {
  long chi = 0;
  for (std::size_t k = 0; k < betti.size(); ++k) chi += (k % 2 ? -1 : 1) * betti[k];
  return chi;
}

long HomologyResult::torsion_count(int k, std::uint64_t p) const {
  if (k < 0 || k >= static_cast<int>(torsion.size())) return 0;
  long n = 0;
  for (auto q : torsion[k]) {
    while (q % p == 0) q /= p;
    if (q == 1) ++n;
  }
  return n;
}

long uct_prediction(const HomologyResult& integral, int k, std::uint64_t p) {
  return integral.dim(k) + integral.torsion_count(k, p) + integral.torsion_count(k - 1, p);
}

// ------------------------------------------------------ field (co)homology

namespace {

// Persistence-style reduction with clearing. `out(k)` gives the columns of
// the differential leaving degree k; `order` lists degrees so that each
// degree's incoming differential is reduced before it.
template <class F>
GradedBasis<F> graded_bases(const F& f, const ChainComplex& cc, bool homological) {
  const int top = cc.top_degree();
  GradedBasis<F> result;
  if (top < 0) return result;
  result.degree.reserve(top + 1);
  std::vector<std::optional<ClassBasis<F>>> slots(top + 1);
  std::optional<ColumnReducer<F>> incoming;
  for (int step = 0; step <= top; ++step) {
    const int k = homological ? top - step : step;
    const int target = homological ? k - 1 : k + 1;
    ClassBasis<F> basis(f, cc.cells(k));
    std::vector<char> cleared(cc.cells(k), 0);
    if (incoming) {
      for (std::size_t c = 0; c < incoming->size(); ++c) {
        const auto& v = incoming->column(c).vec;
        cleared[v.back().first] = 1;
        basis.add_boundary(v);
      }
    }
    const bool has_target = target >= 0 && target <= top;
    ColumnReducer<F> next(f, has_target ? cc.cells(target) : 0);
    std::vector<SparseVector<F>> cycles;
    if (has_target) {
      auto cols = homological ? cc.boundary_columns(f, k) : cc.coboundary_columns(f, k);
      for (std::size_t j = 0; j < cols.size(); ++j) {
        if (cleared[j]) continue;
        auto tag = unit_vector(f, static_cast<std::uint32_t>(j));
        next.reduce(cols[j], &tag);
        if (cols[j].empty())
          cycles.push_back(std::move(tag));
        else
          next.insert(std::move(cols[j]), std::move(tag));
      }
    } else {
      for (std::size_t j = 0; j < cc.cells(k); ++j)
        if (!cleared[j]) cycles.push_back(unit_vector(f, static_cast<std::uint32_t>(j)));
    }
    for (auto& z : cycles) basis.add_cycle(std::move(z));
    slots[k].emplace(std::move(basis));
    incoming.emplace(std::move(next));
  }
  for (auto& s : slots) result.degree.push_back(std::move(*s));
  return result;
}

template <class F>
Chain chain_from(const ChainComplex& cc, const F& f, int degree, const SparseVector<F>& v) {
  Chain c{degree, std::vector<std::int64_t>(cc.space().count(degree), 0)};
  if constexpr (std::is_same_v<F, PrimeField>) {
    for (const auto& [j, x] : v) c.coefficients[cc.global_index(degree, j)] = f.to_int(x);
  } else {
    // clear denominators, then divide by the content
    mpz_class l = 1;
    for (const auto& [j, x] : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
    for (const auto& [j, x] : v) {
      mpz_class n = x.get_num() * (l / x.get_den());
      if (!n.fits_slong_p()) throw OutOfReachError("representative coefficient exceeds 64 bits");
      c.coefficients[cc.global_index(degree, j)] = n.get_si();
    }
  }
  return c;
}

template <class F>
HomologyResult field_result(const ChainComplex& cc, const CoefficientSpec& coeffs, const F& f, bool homological) {
  HomologyResult r;
  r.coeffs = coeffs;
  auto bases = graded_bases(f, cc, homological);
  for (int k = 0; k <= cc.top_degree(); ++k) {
    const auto& b = bases.degree[k];
    r.betti.push_back(static_cast<long>(b.rank()));
    r.torsion.emplace_back();
    std::vector<Chain> reps;
    for (const auto& v : b.representatives()) reps.push_back(chain_from(cc, f, k, v));
    r.representatives.push_back(std::move(reps));
  }
  return r;
}

std::vector<std::vector<std::pair<std::uint32_t, long>>> integer_columns(const ChainComplex& cc, int k, bool homological) {
  std::vector<std::vector<std::pair<std::uint32_t, long>>> cols(cc.cells(k));
  if (homological) {
    for (std::size_t j = 0; j < cc.cells(k); ++j)
      for (auto [r, s] : cc.boundary(k, j)) cols[j].emplace_back(r, s);
  } else if (k + 1 <= cc.top_degree()) {
    for (std::size_t j = 0; j < cc.cells(k + 1); ++j)
      for (auto [r, s] : cc.boundary(k + 1, j)) cols[r].emplace_back(static_cast<std::uint32_t>(j), s);
  }
  return cols;
}

HomologyResult integral_result(const ChainComplex& cc, bool homological) {
  const int top = cc.top_degree();
  HomologyResult r;
  r.coeffs = CoefficientSpec::integers();
  if (top < 0) return r;
  // factors of the differential leaving each degree
  std::vector<std::vector<mpz_class>> factors(top + 1);
  for (int k = 0; k <= top; ++k) {
    const int target = homological ? k - 1 : k + 1;
    if (target < 0 || target > top) continue;
    factors[k] = diagonal_factors(cc.cells(target), integer_columns(cc, k, homological));
  }
  r.betti.assign(top + 1, 0);
  r.torsion.assign(top + 1, {});
  r.representatives.assign(top + 1, {});
  for (int k = 0; k <= top; ++k) {
    const int into = homological ? k + 1 : k - 1;  // differential arriving in degree k
    long rank_out = static_cast<long>(factors[k].size());
    long rank_in = (into >= 0 && into <= top) ? static_cast<long>(factors[into].size()) : 0;
    r.betti[k] = static_cast<long>(cc.cells(k)) - rank_out - rank_in;
    if (into >= 0 && into <= top) r.torsion[k] = elementary_divisors(factors[into]);
  }
  return r;
}

HomologyResult compute(const ChainComplex& cc, const CoefficientSpec& coeffs, bool homological) {
  if (!coeffs.is_field()) return integral_result(cc, homological);
  return with_field(coeffs, [&](const auto& f) { return field_result(cc, coeffs, f, homological); });
}

}  // namespace

template <class F>
GradedBasis<F> homology_bases(const ChainComplex& cc, const F& f) {
  return graded_bases(f, cc, true);
}
template <class F>
GradedBasis<F> cohomology_bases(const ChainComplex& cc, const F& f) {
  return graded_bases(f, cc, false);
}
template GradedBasis<PrimeField> homology_bases(const ChainComplex&, const PrimeField&);
template GradedBasis<PrimeField> cohomology_bases(const ChainComplex&, const PrimeField&);
template GradedBasis<RationalField> homology_bases(const ChainComplex&, const RationalField&);
template GradedBasis<RationalField> cohomology_bases(const ChainComplex&, const RationalField&);

HomologyResult homology(const SimplicialComplex& x, const CoefficientSpec& coeffs) {
  return compute(ChainComplex(x), coeffs, true);
}
HomologyResult relative_homology(const SimplicialComplex& x, const SimplicialComplex& a, const CoefficientSpec& coeffs) {
  return compute(ChainComplex(x, a), coeffs, true);
}
HomologyResult cohomology(const SimplicialComplex& x, const CoefficientSpec& coeffs) {
  return compute(ChainComplex(x), coeffs, false);
}
HomologyResult relative_cohomology(const SimplicialComplex& x, const SimplicialComplex& a, const CoefficientSpec& coeffs) {
  return compute(ChainComplex(x, a), coeffs, false);
}

Chain to_global(const ChainComplex& cc, int degree, const SparseVector<PrimeField>& v) {
  return chain_from(cc, PrimeField{2}, degree, v);
}

// --------------------------------------------------------------- Bockstein

std::vector<std::vector<int>> bockstein(const SimplicialComplex& x, int k, BocksteinVariant variant) {
  return bockstein(ChainComplex(x), k, variant);
}

std::vector<std::vector<int>> bockstein(const ChainComplex& cc, int k, BocksteinVariant variant) {
  const PrimeField f2{2};
  const bool hom = variant == BocksteinVariant::Homology;
  const int target = hom ? k - 1 : k + 1;
  const int top = cc.top_degree();
  if (k < 0 || k > top) return {};
  auto bases = hom ? homology_bases(cc, f2) : cohomology_bases(cc, f2);
  const auto& source = bases.degree[k];
  if (target < 0 || target > top) return std::vector<std::vector<int>>(0, std::vector<int>(source.rank()));
  const auto& dest = bases.degree[target];
  std::vector<std::vector<int>> matrix(dest.rank(), std::vector<int>(source.rank(), 0));
  for (std::size_t c = 0; c < source.rank(); ++c) {
    // integral lift with 0/1 coefficients, differential, halve
    std::vector<long> acc(cc.cells(target), 0);
    for (const auto& [j, v] : source.representative(c)) {
      if (hom) {
        for (auto [r, s] : cc.boundary(k, j)) acc[r] += s;
      }
    }
    if (!hom) {
      std::vector<char> alpha(cc.cells(k), 0);
      for (const auto& [j, v] : source.representative(c)) alpha[j] = 1;
      for (std::size_t i = 0; i < cc.cells(target); ++i)
        for (auto [r, s] : cc.boundary(target, i))
          if (alpha[r]) acc[i] += s;
    }
    SparseVector<PrimeField> half;
    for (std::size_t r = 0; r < acc.size(); ++r) {
      if (acc[r] % 2 != 0) throw std::logic_error("bockstein: lift is not a mod-2 cycle");
      if ((acc[r] / 2) % 2 != 0) half.emplace_back(static_cast<std::uint32_t>(r), 1u);
    }
    auto coords = dest.coordinates(half);
    if (!coords) throw std::logic_error("bockstein: image is not a cycle");
    for (std::size_t r = 0; r < coords->size(); ++r) matrix[r][c] = static_cast<int>((*coords)[r]);
  }
  return matrix;
}

// ------------------------------------------------------- cup, cap, duality

namespace {

std::int64_t reduce_coeff(std::int64_t v, const CoefficientSpec& coeffs) {
  if (coeffs.kind() != CoefficientSpec::Kind::PrimeField) return v;
  const std::int64_t p = coeffs.prime();
  v %= p;
  return v < 0 ? v + p : v;
}

std::size_t face_index(const SimplicialComplex& x, std::span<const Vertex> s) { return *x.index_of(s); }

void check_degree(const SimplicialComplex& x, const Chain& c, const char* what) {
  if (c.degree < 0 || c.degree > x.dimension() || c.coefficients.size() != x.count(c.degree))
    throw ValidationError(std::string(what) + ": chain does not match the complex");
}

}  // namespace

CupResult cup_product(const SimplicialComplex& x, const Chain& alpha, const Chain& beta, const CoefficientSpec& coeffs) {
  check_degree(x, alpha, "cup");
  check_degree(x, beta, "cup");
  const int p = alpha.degree, q = beta.degree, n = p + q;
  CupResult out;
  if (n > x.dimension()) {
    out.overflow = true;
    out.cochain = Chain{n, {}};
    return out;
  }
  out.cochain = Chain{n, std::vector<std::int64_t>(x.count(n), 0)};
  for (std::size_t i = 0; i < x.count(n); ++i) {
    auto s = x.face(n, i);
    auto a = alpha.coefficients[face_index(x, s.subspan(0, p + 1))];
    if (a == 0) continue;
    auto b = beta.coefficients[face_index(x, s.subspan(p, q + 1))];
    out.cochain.coefficients[i] = reduce_coeff(a * b, coeffs);
  }
  return out;
}

Chain cap_product(const SimplicialComplex& x, const Chain& alpha, const Chain& z, const CoefficientSpec& coeffs) {
  check_degree(x, alpha, "cap");
  check_degree(x, z, "cap");
  const int p = alpha.degree, n = z.degree;
  if (p > n) throw ValidationError("cap: cochain degree exceeds chain degree");
  Chain out{n - p, std::vector<std::int64_t>(x.count(n - p), 0)};
  for (std::size_t i = 0; i < x.count(n); ++i) {
    if (z.coefficients[i] == 0) continue;
    auto s = x.face(n, i);
    auto a = alpha.coefficients[face_index(x, s.subspan(0, p + 1))];
    if (a == 0) continue;
    auto& slot = out.coefficients[face_index(x, s.subspan(p, n - p + 1))];
    slot = reduce_coeff(slot + a * z.coefficients[i], coeffs);
  }
  return out;
}

Chain coboundary(const SimplicialComplex& x, const Chain& alpha, const CoefficientSpec& coeffs) {
  check_degree(x, alpha, "coboundary");
  const int k = alpha.degree;
  Chain out{k + 1, std::vector<std::int64_t>(x.count(k + 1), 0)};
  std::vector<Vertex> sub(k + 1);
  for (std::size_t i = 0; i < x.count(k + 1); ++i) {
    auto s = x.face(k + 1, i);
    std::int64_t acc = 0;
    for (std::size_t o = 0; o < s.size(); ++o) {
      std::size_t w = 0;
      for (std::size_t t = 0; t < s.size(); ++t)
        if (t != o) sub[w++] = s[t];
      acc += (o % 2 ? -1 : 1) * alpha.coefficients[face_index(x, sub)];
    }
    out.coefficients[i] = reduce_coeff(acc, coeffs);
  }
  return out;
}

Chain boundary(const SimplicialComplex& x, const Chain& z, const CoefficientSpec& coeffs) {
  check_degree(x, z, "boundary");
  const int k = z.degree;
  if (k == 0) return Chain{-1, {}};
  Chain out{k - 1, std::vector<std::int64_t>(x.count(k - 1), 0)};
  std::vector<Vertex> sub(k);
  for (std::size_t i = 0; i < x.count(k); ++i) {
    if (z.coefficients[i] == 0) continue;
    auto s = x.face(k, i);
    for (std::size_t o = 0; o < s.size(); ++o) {
      std::size_t w = 0;
      for (std::size_t t = 0; t < s.size(); ++t)
        if (t != o) sub[w++] = s[t];
      auto& slot = out.coefficients[face_index(x, sub)];
      slot += (o % 2 ? -1 : 1) * z.coefficients[i];
    }
  }
  for (auto& c : out.coefficients) c = reduce_coeff(c, coeffs);
  return out;
}

std::int64_t evaluate(const Chain& alpha, const Chain& z, const CoefficientSpec& coeffs) {
  if (alpha.degree != z.degree || alpha.coefficients.size() != z.coefficients.size())
    throw ValidationError("evaluate: degree mismatch");
  std::int64_t acc = 0;
  for (std::size_t i = 0; i < z.coefficients.size(); ++i) acc = reduce_coeff(acc + alpha.coefficients[i] * z.coefficients[i], coeffs);
  return acc;
}

Chain fundamental_class(const SimplicialComplex& x, const CoefficientSpec& coeffs, const std::optional<Orientation>& orientation) {
  auto verdict = is_pseudomanifold(x, false);
  if (!verdict.ok) throw ValidationError("fundamental class: " + verdict.reason);
  const int n = x.dimension();
  Chain c{n, std::vector<std::int64_t>(x.count(n), 1)};
  if (!coeffs.is_f2()) {
    std::optional<Orientation> o = orientation;
    if (!o) {
      auto r = orient(x);
      if (!r.orientable()) throw ValidationError("fundamental class: complex is not orientable");
      o = r.orientation;
    }
    for (std::size_t i = 0; i < c.coefficients.size(); ++i) c.coefficients[i] = reduce_coeff(o->signs[i], coeffs);
  }
  if (n > 0) {
    auto bd = boundary(x, c, coeffs);
    auto edge = boundary_subcomplex(x);
    for (std::size_t i = 0; i < bd.coefficients.size(); ++i)
      if (bd.coefficients[i] != 0 && !edge.contains(x.face(n - 1, i)))
        throw ValidationError("fundamental class: signed facet sum is not a relative cycle");
  }
  return c;
}

}  // namespace witt
