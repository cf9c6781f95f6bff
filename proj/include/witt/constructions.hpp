#pragma once

#include <string>
#include <utility>
#include <vector>

#include "witt/intersection.hpp"

namespace witt {

struct CatalogueEntry {
  std::string name;
  SimplicialComplex complex;
  std::vector<std::size_t> f_vector;
  std::vector<long> betti;                          // integral ranks
  std::vector<std::vector<std::uint64_t>> torsion;  // prime-power orders
};

/// Catalogued triangulations: sphere(n) for n ≤ 6, s1, rp2, rp3, torus,
/// klein, genus(g) for g ≤ 3, cp2. Each entry's f-vector and integral
/// homology are checked the first time it is requested.
SimplicialComplex standard_space(const std::string& name);
CatalogueEntry catalogue_entry(const std::string& name);
std::vector<std::string> catalogue_names();

/// Connected sum of two closed surfaces: removes one triangle from each and identifies their boundaries.
SimplicialComplex connected_sum(const SimplicialComplex& a, const SimplicialComplex& b);
/// sd(∂Δ^{n+1}) modulo S ~ complement(S).
SimplicialComplex antipodal_projective_space(int n);

/// A declared boundary component together with its identification with W.
struct BoundaryPiece {
  std::string name;
  SimplicialComplex declared;
  /// declared vertex -> vertex of W
  std::vector<std::pair<Vertex, Vertex>> map;
};

struct BordismCertificate {
  StratifiedSpace w;
  std::vector<BoundaryPiece> pieces;
  /// Vertices of W created as cone points of pinches, whose links are checked.
  std::vector<Vertex> pinch_points;
};

/// W = c̄X with the apex in the bottom stratum. Throws ValidationError for
/// even-dimensional X unless `force` is set.
BordismCertificate closed_cone_nullbordism(const SimplicialComplex& x, bool force = false);

/// X × [0, 1] with the product stratification from the candidate stratification of X.
BordismCertificate cylinder_bordism(const SimplicialComplex& x);

/// A gluing point: (surface index, vertex of that surface).
using SurfacePoint = std::pair<std::size_t, Vertex>;
/// Trace of the pinch from ⊔ S_i to the space obtained by gluing each class
/// to one point. Each surface is subdivided twice; the closed stars of the
/// chosen points are coned off in the top of ⊔ S_i × [0,1], and a collar on
/// the outgoing boundary makes each cone point interior.
BordismCertificate pinch_bordism_2d(const std::vector<SimplicialComplex>& surfaces,
                                    const std::vector<std::vector<SurfacePoint>>& classes);

struct BordismCheck {
  std::string name;
  bool pass = false;
  std::string detail;
};
struct PinchLinkReport {
  Vertex vertex = 0;
  std::vector<long> link_f2;  // dim H_*(L;F2)
  long ih1_f2 = 0;
  long ih1_q = 0;
  bool pass = false;
};
struct BordismReport {
  bool pass = false;
  std::vector<BordismCheck> checks;
  std::vector<PinchLinkReport> pinch_links;
  WittReport witt;
};
BordismReport verify_bordism(const BordismCertificate& cert, const CoefficientSpec& coeffs, OrientationMode mode);

}  // namespace witt
