#pragma once

#include <map>
#include <vector>

#include "witt/simplicial.hpp"

namespace witt {

/// Complex with a filtration X_0 ⊆ ... ⊆ X_n = X by closed subcomplexes,
/// dim X_d ≤ d, and X_{n-1} = X_{n-2}.
class StratifiedSpace {
 public:
  StratifiedSpace() = default;
  /// Unchecked; use stratify() for validated construction.
  StratifiedSpace(SimplicialComplex x, std::vector<SimplicialComplex> filtration);

  const SimplicialComplex& complex() const { return x_; }
  int dimension() const { return x_.dimension(); }
  /// X_d; empty for d < 0, X for d ≥ n.
  const SimplicialComplex& skeleton(int d) const;
  const std::vector<SimplicialComplex>& filtration() const { return filtration_; }
  /// X_{n-2}.
  const SimplicialComplex& singular_set() const { return skeleton(dimension() - 2); }
  bool is_trivial() const { return singular_set().empty(); }
  /// Smallest d with v in X_d (n for vertices outside the singular set).
  std::vector<int> vertex_levels() const;

 private:
  SimplicialComplex x_;
  std::vector<SimplicialComplex> filtration_;
  SimplicialComplex empty_;
};

/// Validated stratification. `declared` maps d to X_d; an omitted X_d is the
/// greatest declared X_{d'} with d' < d (empty if none), and X_n = X.
StratifiedSpace stratify(const SimplicialComplex& x, const std::map<int, SimplicialComplex>& declared);
StratifiedSpace trivial_stratification(const SimplicialComplex& x);

/// Vertex-to-facet incidence for repeated link queries.
class LinkIndex {
 public:
  explicit LinkIndex(const SimplicialComplex& x);
  SimplicialComplex link(std::span<const Vertex> s) const;
  /// Facets of x containing s (indices into x.facets()).
  std::vector<std::size_t> star_facets(std::span<const Vertex> s) const;

 private:
  const SimplicialComplex* x_;
  std::vector<std::vector<std::size_t>> incidence_;
};

enum class LinkSignature { Sphere, Ball, Other };
/// Integral-homology type of a `dim`-dimensional link: Sphere if H~_*(L;Z)
/// is Z in degree `dim` only (the empty complex is S^{-1}), Ball if L is
/// nonempty and acyclic.
LinkSignature link_signature(const SimplicialComplex& l, int dim);

struct CandidateStratification {
  StratifiedSpace space;
  /// Homology-sphere tests cannot certify manifold points in dimension ≥ 5.
  bool heuristic = false;
  /// Simplices whose link failed, before closing downward.
  std::vector<Simplex> failing;
};
/// Places in the singular set every simplex whose link does not have the
/// homology of a sphere (interior) or a point (boundary) of the right
/// dimension; lower strata are found the same way inside each skeleton.
CandidateStratification candidate_stratification(const SimplicialComplex& x);

/// Barycentric subdivision with the filtration carried; subdivided skeleta
/// are full subcomplexes.
struct StratifiedSubdivision {
  StratifiedSpace space;
  Subdivision map;
};
StratifiedSubdivision subdivide(const StratifiedSpace& s);

/// X × M with (X × M)_{d+m} = X_d × M, m = dim M.
StratifiedSpace product_with_manifold(const StratifiedSpace& s, const SimplicialComplex& m);

}  // namespace witt
