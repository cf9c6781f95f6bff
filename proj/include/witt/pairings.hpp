#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "witt/forms.hpp"
#include "witt/homology.hpp"
#include "witt/intersection.hpp"

namespace witt {

struct MiddleFormReport {
  int degree = 0;
  SymmetricForm form;
  WittClassF2 witt;
  /// "manifold" (cup products of middle cocycles) or "isolated" (exterior image).
  std::string method;
  /// "z" when the space is Z-orientable, "z2" otherwise.
  std::string track;
  /// Basis provenance: middle cocycles (manifold) or absolute cycle lifts (isolated).
  std::vector<Chain> basis;
  /// The complex carrying `basis`.
  SimplicialComplex carrier;
};

struct ManifoldFormOptions {
  /// Check that every link has the homology of a sphere. Skipped only for
  /// products of known manifolds.
  bool verify_links = true;
};
/// Gram matrix ⟨α_i ∪ α_j, [X]⟩ on a basis of H^m(X;F2), dim X = 2m.
MiddleFormReport intersection_form_manifold(const SimplicialComplex& x, const ManifoldFormOptions& options = {});

struct ExteriorDecomposition {
  /// Second barycentric subdivision of X.
  SimplicialComplex subdivided;
  SimplicialComplex m;
  SimplicialComplex boundary;
  /// Removed singular vertices, in X's labels and in the subdivision.
  std::vector<Vertex> singular;
  std::vector<Vertex> singular_subdivided;
  /// Link of each removed vertex in the subdivision; their disjoint union is the boundary.
  std::vector<SimplicialComplex> links;
};
/// Complement of the open stars of the singular vertices in sd²(X).
/// Throws OutOfReachError if the singular set is not a set of vertices.
ExteriorDecomposition exterior(const StratifiedSpace& s);

struct ImageReport {
  int degree = 0;
  ExteriorDecomposition ext;
  long absolute_dim = 0;  // dim H_d(M)
  long relative_dim = 0;  // dim H_d(M, ∂M)
  long image_dim = 0;
  long direct_ih_dim = 0;
  /// Absolute cycles on M whose images form a basis of the image.
  std::vector<Chain> lifts;
  /// Absolute classes (coordinates in the H_d(M) basis) mapping to zero.
  std::vector<std::vector<std::uint32_t>> kernel;
};
/// I^m̄H_{2k+1}(X;F2) as im(H_{2k+1}(M) → H_{2k+1}(M,∂M)) for dim X = 4k+2
/// with isolated singularities; also computes the direct IH dimension.
ImageReport ih_middle_via_image(const StratifiedSpace& s);

struct IsolatedFormOptions {
  /// Recompute the Gram matrix with this many randomized alternative lifts.
  int alternate_seeds = 2;
  std::uint64_t seed = 1;
};
struct IsolatedFormReport {
  MiddleFormReport middle;
  ImageReport image;
  /// Gram matrices agreed for all alternative lifts.
  bool lift_independent = true;
  /// ⟨δz ∪ δz, [M,∂M]⟩ = 0 for every z in the image.
  bool cup_squares_vanish = true;
  long cup_squares_checked = 0;
  /// Mod-2 homology Bockstein H_1(M) → H_0(M).
  std::vector<std::vector<int>> bockstein;
  bool bockstein_zero = true;
};
IsolatedFormReport intersection_form_isolated(const StratifiedSpace& s, const IsolatedFormOptions& options = {});

struct WInvariantReport {
  WittClassF2 w;
  MiddleFormReport middle;
  std::string route;
};
/// Witt class of the middle form of a (4k+2)-dimensional F2-Witt space that is
/// a manifold or has isolated singularities. Other spaces: OutOfReachError.
WInvariantReport w_invariant(const StratifiedSpace& s);

struct LemmaReport {
  bool orientable = false;
  bool accepted = false;
  std::string reason;
  int k = 0;
  long betti = 0;         // B = rank H_{2k+1}(M;Z)
  long t2_odd = 0;        // 2-primary summands of T_{2k+1}
  long t2_even = 0;       // 2-primary summands of T_{2k}
  long mod2_dim = 0;      // dim H_{2k+1}(M;F2), direct
  long uct_dim = 0;       // B + t2_odd + t2_even
  bool torsion_match = false;
  bool betti_even = false;
  bool parity_even = false;
  bool pass = false;
};
LemmaReport lemma_check(const SimplicialComplex& m);

struct KunnethRow {
  int degree = 0;
  long direct = 0;
  long convolution = 0;
};
struct ProductStabilityReport {
  std::optional<WittClassF2> w_factor;
  std::optional<WittClassF2> w_product;
  std::string w_note;
  std::vector<KunnethRow> kunneth;
  bool kunneth_match = true;
  std::size_t product_facets = 0;
  bool pass = false;
};
struct ProductOptions {
  std::size_t simplex_ceiling = 5000000;
};
/// Compares w(X × M) with w(X) and the single-perversity Künneth table, M a closed manifold.
ProductStabilityReport product_w_stability(const StratifiedSpace& x, const SimplicialComplex& m,
                                           const ProductOptions& options = {});

/// Total simplex count of the staircase product, computed from f-vectors.
std::size_t product_simplex_estimate(const SimplicialComplex& x, const SimplicialComplex& y);

}  // namespace witt
