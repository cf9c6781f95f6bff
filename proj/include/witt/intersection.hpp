#pragma once

#include <optional>
#include <string>
#include <vector>

#include "witt/homology.hpp"
#include "witt/stratified.hpp"

namespace witt {

/// GM perversity p̄(c) for 2 ≤ c ≤ n.
class Perversity {
 public:
  /// values[c - 2] = p̄(c). Throws ValidationError unless p̄(2) = 0 and each step is 0 or 1.
  explicit Perversity(std::vector<int> values);
  int operator()(int c) const;
  int max_codimension() const { return static_cast<int>(values_.size()) + 1; }
  const std::vector<int>& values() const { return values_; }

 private:
  std::vector<int> values_;
};

/// m̄(c) = ⌊(c−2)/2⌋.
Perversity middle_perversity(int n);
Perversity zero_perversity(int n);
Perversity top_perversity(int n);

struct IHOptions {
  /// Subdivide once before forming allowable chains. Pass false only when the
  /// filtration is known to consist of full subcomplexes.
  bool subdivide = true;
  bool representatives = false;
};

struct IHResult {
  CoefficientSpec coeffs = CoefficientSpec::f2();
  std::vector<long> dims;
  /// The complex the chains live on (the subdivision unless disabled).
  SimplicialComplex complex;
  std::vector<std::vector<Chain>> representatives;
  long dim(int k) const { return k >= 0 && k < static_cast<int>(dims.size()) ? dims[k] : 0; }
};

IHResult intersection_homology(const StratifiedSpace& s, const Perversity& p, const CoefficientSpec& coeffs,
                               const IHOptions& options = {});

/// Whether an i-simplex with cnt[c] vertices in X_{n-c} is p̄-allowable.
bool allowable(int i, const std::vector<int>& count_by_codim, const Perversity& p);

struct StratumReport {
  int stratum_dimension = 0;
  /// Condition degree k when the link has dimension 2k, k > 0; otherwise 0.
  int k = 0;
  bool has_condition = false;
  /// A simplex of the stratum, as the original simplices whose barycenters span it.
  std::vector<Simplex> witness;
  std::size_t simplices = 0;
  /// dim I^m̄H_k of the link, when a condition applies.
  long link_ih = 0;
  bool pass = true;
  bool in_boundary = false;
  std::string detail;
};

struct WittReport {
  bool pass = true;
  std::vector<StratumReport> strata;
  /// Links within one stratum disagreed.
  std::vector<std::string> errors;
};

/// Checks I^m̄H_k(L) = 0 for links L^{2k}, k > 0, of every stratum
/// component. Strata lying in `skip_boundary` are not checked.
WittReport witt_condition_check(const StratifiedSpace& s, const CoefficientSpec& coeffs,
                                const SimplicialComplex& skip_boundary = SimplicialComplex());

enum class OrientationMode { Z, Z2 };

struct WittVerdict {
  bool witt = false;
  bool pseudomanifold = false;
  bool oriented = false;
  std::string pseudomanifold_detail;
  WittReport report;
};
WittVerdict is_witt_space(const StratifiedSpace& s, const CoefficientSpec& coeffs, OrientationMode mode);

}  // namespace witt
