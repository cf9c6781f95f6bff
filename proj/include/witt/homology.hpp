#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "witt/field.hpp"
#include "witt/linalg.hpp"
#include "witt/simplicial.hpp"

namespace witt {

/// Oriented simplicial chain complex of X, or of the pair (X, A) when a
/// subcomplex is given: cells in degree k are the k-simplices of X not in A,
/// numbered in the face-table order of X.
class ChainComplex {
 public:
  explicit ChainComplex(const SimplicialComplex& x);
  ChainComplex(const SimplicialComplex& x, const SimplicialComplex& relative_to);

  const SimplicialComplex& space() const { return x_; }
  int top_degree() const { return x_.dimension(); }
  std::size_t cells(int k) const;
  /// Index in X's face table of local cell j in degree k.
  std::size_t global_index(int k, std::size_t j) const { return globals_[k][j]; }
  /// Local index of a global k-simplex, or -1 when it lies in the subcomplex.
  long local_index(int k, std::size_t g) const { return locals_[k][g]; }

  /// Integer boundary of cell j in degree k, as (local row, +-1) pairs.
  std::vector<std::pair<std::uint32_t, int>> boundary(int k, std::size_t j) const;

  template <class F>
  std::vector<SparseVector<F>> boundary_columns(const F& f, int k) const {
    std::vector<SparseVector<F>> cols(cells(k));
    if (k <= 0) return cols;
    for (std::size_t j = 0; j < cells(k); ++j)
      for (auto [r, s] : boundary(k, j)) cols[j].emplace_back(r, f.from_int(s));
    return cols;
  }
  /// Columns of the coboundary C^k -> C^{k+1} (transpose of the boundary out of degree k+1).
  template <class F>
  std::vector<SparseVector<F>> coboundary_columns(const F& f, int k) const {
    std::vector<SparseVector<F>> cols(cells(k));
    if (k + 1 > top_degree() || k < 0) return cols;
    for (std::size_t j = 0; j < cells(k + 1); ++j)
      for (auto [r, s] : boundary(k + 1, j)) cols[r].emplace_back(static_cast<std::uint32_t>(j), f.from_int(s));
    return cols;
  }

 private:
  SimplicialComplex x_;
  std::vector<std::vector<std::size_t>> globals_;
  std::vector<std::vector<long>> locals_;
};

/// Dense chain or cochain over X's face table in one degree; entries are
/// integers (reduced mod p for prime fields).
struct Chain {
  int degree = 0;
  std::vector<std::int64_t> coefficients;
  bool is_zero() const;
};

struct HomologyResult {
  CoefficientSpec coeffs = CoefficientSpec::integers();
  std::vector<long> betti;                        // rank of the free part / field dimension
  std::vector<std::vector<std::uint64_t>> torsion;  // prime-power orders, integral only
  /// Cycle representatives per degree (field coefficients only; integral results leave this empty).
  std::vector<std::vector<Chain>> representatives;

  long dim(int k) const { return k >= 0 && k < static_cast<int>(betti.size()) ? betti[k] : 0; }
  long euler_characteristic() const;
  /// Number of p-power summands in the torsion of degree k.
  long torsion_count(int k, std::uint64_t p) const;
};

HomologyResult homology(const SimplicialComplex& x, const CoefficientSpec& coeffs);
HomologyResult relative_homology(const SimplicialComplex& x, const SimplicialComplex& a, const CoefficientSpec& coeffs);
HomologyResult cohomology(const SimplicialComplex& x, const CoefficientSpec& coeffs);
HomologyResult relative_cohomology(const SimplicialComplex& x, const SimplicialComplex& a, const CoefficientSpec& coeffs);

/// Nonzero diagonal entries (units included) of a diagonalization of an integer
/// matrix given by sparse columns. Not normalized to a divisibility chain.
std::vector<mpz_class> diagonal_factors(std::size_t rows, const std::vector<std::vector<std::pair<std::uint32_t, long>>>& columns);
/// Sorted prime-power decomposition of the diagonal entries larger than one.
std::vector<std::uint64_t> elementary_divisors(const std::vector<mpz_class>& factors);

/// Predicted dim H_k(X; F_p) from integral homology: betti_k + t_p(k) + t_p(k-1).
long uct_prediction(const HomologyResult& integral, int k, std::uint64_t p = 2);

/// Field (co)homology bases in every degree, with coordinates for arbitrary (co)cycles.
/// Vectors are over the local cell numbering of the chain complex.
template <class F>
struct GradedBasis {
  std::vector<ClassBasis<F>> degree;
};
template <class F>
GradedBasis<F> homology_bases(const ChainComplex& cc, const F& f);
template <class F>
GradedBasis<F> cohomology_bases(const ChainComplex& cc, const F& f);

enum class BocksteinVariant { Homology, Cohomology };
/// Mod-2 Bockstein from degree k, as a 0/1 matrix (rows: target basis, columns: source basis).
std::vector<std::vector<int>> bockstein(const SimplicialComplex& x, int k, BocksteinVariant variant);
std::vector<std::vector<int>> bockstein(const ChainComplex& cc, int k, BocksteinVariant variant);

/// Alexander-Whitney cup product of cochains on X (front p-face times back q-face).
/// Coefficients are reduced per `coeffs` (integers: no reduction).
struct CupResult {
  Chain cochain;
  bool overflow = false;  // p + q exceeded dim X; cochain is zero
};
CupResult cup_product(const SimplicialComplex& x, const Chain& alpha, const Chain& beta, const CoefficientSpec& coeffs);
/// z cap alpha: sum over simplices of z of alpha(front p-face) * back (n-p)-face.
Chain cap_product(const SimplicialComplex& x, const Chain& alpha, const Chain& z, const CoefficientSpec& coeffs);
/// Coboundary / boundary at chain level over X's face table.
Chain coboundary(const SimplicialComplex& x, const Chain& alpha, const CoefficientSpec& coeffs);
Chain boundary(const SimplicialComplex& x, const Chain& z, const CoefficientSpec& coeffs);
std::int64_t evaluate(const Chain& alpha, const Chain& z, const CoefficientSpec& coeffs);

/// Sum of facets with orientation signs (Z/Q) or all ones (F_2, any pseudomanifold).
/// With a boundary the result is a relative cycle. Throws ValidationError for
/// non-orientable inputs over Z/Q or when the chain is not a (relative) cycle.
Chain fundamental_class(const SimplicialComplex& x, const CoefficientSpec& coeffs,
                        const std::optional<Orientation>& orientation = std::nullopt);

/// Conversions between dense chains over X and local sparse vectors of a chain complex.
template <class F>
SparseVector<F> to_local(const ChainComplex& cc, const F& f, const Chain& c) {
  SparseVector<F> v;
  for (std::size_t j = 0; j < cc.cells(c.degree); ++j) {
    auto x = f.from_int(c.coefficients[cc.global_index(c.degree, j)]);
    if (!f.is_zero(x)) v.emplace_back(static_cast<std::uint32_t>(j), x);
  }
  return v;
}
Chain to_global(const ChainComplex& cc, int degree, const SparseVector<PrimeField>& v);

}  // namespace witt
