#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "witt/field.hpp"

namespace witt {

using FieldVector = std::vector<std::uint32_t>;
using FieldMatrix = std::vector<FieldVector>;

/// Symmetric bilinear form over F_p given by its Gram matrix.
class SymmetricForm {
 public:
  SymmetricForm() = default;
  /// Entries are reduced mod p; throws ValidationError if the matrix is not
  /// square and symmetric.
  SymmetricForm(std::vector<std::vector<std::int64_t>> gram, std::uint32_t p = 2, std::vector<std::string> labels = {});

  std::size_t dim() const { return gram_.size(); }
  std::uint32_t prime() const { return p_; }
  const FieldMatrix& gram() const { return gram_; }
  std::uint32_t operator()(std::size_t i, std::size_t j) const { return gram_[i][j]; }
  std::uint32_t pair(const FieldVector& u, const FieldVector& v) const;
  const std::vector<std::string>& labels() const { return labels_; }
  /// Gram matrix of the vectors in `basis`.
  SymmetricForm restrict_to(const FieldMatrix& basis) const;

  friend bool operator==(const SymmetricForm& a, const SymmetricForm& b) { return a.p_ == b.p_ && a.gram_ == b.gram_; }

 private:
  std::uint32_t p_ = 2;
  FieldMatrix gram_;
  std::vector<std::string> labels_;
};

SymmetricForm direct_sum(const SymmetricForm& a, const SymmetricForm& b);
SymmetricForm hyperbolic_plane(std::uint32_t p = 2);
SymmetricForm diagonal_form(const std::vector<std::int64_t>& entries, std::uint32_t p = 2);

/// Rank of a matrix over F_p.
std::size_t matrix_rank(FieldMatrix m, std::uint32_t p);
/// Basis of {v : M v = 0} over F_p, in reduced echelon order.
FieldMatrix null_space(const FieldMatrix& m, std::uint32_t p);

struct RadicalReduction {
  SymmetricForm form;         // nondegenerate, on the complement below
  std::size_t radical_dim = 0;
  FieldMatrix radical;        // basis of the radical
  FieldMatrix complement;     // basis of a complement, standard vectors chosen greedily
};
RadicalReduction radical_reduce(const SymmetricForm& f);
std::size_t form_rank(const SymmetricForm& f);

struct WittClassF2 {
  int bit = 0;
  friend bool operator==(WittClassF2, WittClassF2) = default;
};
/// Rank of the nondegenerate reduction mod 2. Throws ValidationError over other fields.
WittClassF2 witt_class_f2(const SymmetricForm& f);

/// Search bound for exhaustive isotropic search.
constexpr std::size_t kExhaustiveIsotropicLimit = 24;
/// Least nonzero v (coordinate 0 is the low bit) with f(v,v) = 0. Above the
/// exhaustive bound `structured` must be set: then e_i with f(e_i,e_i) = 0,
/// else e_0 + e_1.
std::optional<FieldVector> find_isotropic(const SymmetricForm& f, bool structured = false);

struct SplitBasis {
  bool split = false;
  std::size_t half = 0;
  /// New basis vectors in old coordinates: α_1..α_h, β_1..β_h, then the radical.
  FieldMatrix basis;
  /// Gram matrix in the new basis: [[0, I, 0], [I, A, 0], [0, 0, 0]].
  SymmetricForm conjugated;
  /// Set when not split.
  std::string certificate;
};
SplitBasis split_basis(const SymmetricForm& f);

struct SurgeryBasis {
  FieldVector alpha;
  FieldVector beta;
  FieldMatrix gammas;
};
/// α·α = α·γ_i = 0, α·β = 1. Throws ValidationError if f is not split or has rank 0.
SurgeryBasis surgery_basis(const SymmetricForm& f);

/// Rows of '0'/'1' characters (values mod p written in decimal when p > 2).
std::vector<std::string> form_rows(const SymmetricForm& f);

}  // namespace witt
