#include "witt/forms.hpp"

#include <algorithm>

#include "witt/errors.hpp"

namespace witt {

namespace {

PrimeField field_of(std::uint32_t p) { return PrimeField{p}; }

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> echelon(FieldMatrix& m, std::uint32_t p) {
  const auto f = field_of(p);
  std::vector<std::size_t> pivots;
  if (m.empty()) return pivots;
  const std::size_t cols = m[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t s = r;
    while (s < m.size() && m[s][c] == 0) ++s;
    if (s == m.size()) continue;
    std::swap(m[r], m[s]);
    const auto inv = f.inv(m[r][c]);
    for (auto& x : m[r]) x = f.mul(x, inv);
    for (std::size_t o = 0; o < m.size(); ++o) {
      if (o == r || m[o][c] == 0) continue;
      const auto k = m[o][c];
      for (std::size_t j = 0; j < cols; ++j) m[o][j] = f.sub(m[o][j], f.mul(k, m[r][j]));
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

bool independent_of(const FieldMatrix& rows, const FieldVector& v, std::uint32_t p) {
  FieldMatrix m = rows;
  m.push_back(v);
  return matrix_rank(m, p) == rows.size() + 1;
}

FieldVector unit(std::size_t n, std::size_t i) {
  FieldVector v(n, 0);
  v[i] = 1;
  return v;
}

// F2 vectors of length ≤ 64 as bit masks.
using Bits = std::uint64_t;

class XorBasis {
 public:
  bool insert(Bits v) {
    for (int b = 63; b >= 0 && v; --b) {
      if (!((v >> b) & 1)) continue;
      if (!rows_[b]) {
        rows_[b] = v;
        return true;
      }
      v ^= rows_[b];
    }
    return false;
  }

 private:
  Bits rows_[64] = {};
};

FieldVector unpack(Bits v, std::size_t n) {
  FieldVector out(n, 0);
  for (std::size_t i = 0; i < n; ++i) out[i] = (v >> i) & 1;
  return out;
}

// Same choices as the generic path below, on bit masks.
SplitBasis split_basis_bits(const SymmetricForm& f) {
  const std::size_t n = f.dim();
  std::vector<Bits> g(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (f(i, j)) g[i] |= Bits{1} << j;
  auto pair = [&](Bits u, Bits v) {
    int parity = 0;
    for (Bits t = u; t; t &= t - 1) parity ^= __builtin_popcountll(g[__builtin_ctzll(t)] & v) & 1;
    return static_cast<Bits>(parity);
  };
  // radical from the reduced row echelon form
  std::vector<Bits> e = g;
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < n; ++c) {
    std::size_t s = r;
    while (s < n && !((e[s] >> c) & 1)) ++s;
    if (s == n) continue;
    std::swap(e[r], e[s]);
    for (std::size_t o = 0; o < n; ++o)
      if (o != r && ((e[o] >> c) & 1)) e[o] ^= e[r];
    pivots.push_back(c);
    ++r;
  }
  std::vector<Bits> radical;
  Bits pivot_mask = 0;
  for (auto c : pivots) pivot_mask |= Bits{1} << c;
  for (std::size_t free = 0; free < n; ++free) {
    if ((pivot_mask >> free) & 1) continue;
    Bits v = Bits{1} << free;
    for (std::size_t k = 0; k < pivots.size(); ++k)
      if ((e[k] >> free) & 1) v |= Bits{1} << pivots[k];
    radical.push_back(v);
  }
  XorBasis span;
  for (Bits v : radical) span.insert(v);
  std::vector<Bits> w;
  for (std::size_t i = 0; i < n && radical.size() + w.size() < n; ++i)
    if (span.insert(Bits{1} << i)) w.push_back(Bits{1} << i);
  std::vector<Bits> alphas, betas;
  while (w.size() >= 2) {
    Bits diag = 0;
    for (std::size_t a = 0; a < w.size(); ++a)
      if (pair(w[a], w[a])) diag |= Bits{1} << a;
    Bits mask = 0;
    if (w.size() <= kExhaustiveIsotropicLimit) {
      for (mask = 1; __builtin_popcountll(mask & diag) % 2 != 0; ++mask) {
      }
    } else {
      mask = ~diag & ((Bits{1} << w.size()) - 1);
      mask = mask ? (mask & -mask) : Bits{3};
    }
    Bits alpha = 0;
    for (Bits t = mask; t; t &= t - 1) alpha ^= w[__builtin_ctzll(t)];
    Bits beta = 0;
    for (std::size_t j = w.size(); j-- > 0;)
      if (pair(alpha, w[j])) {
        beta = w[j];
        break;
      }
    if (!beta) throw std::logic_error("split_basis: degenerate subspace");
    const Bits bb = pair(beta, beta);
    std::vector<Bits> next;
    XorBasis nspan;
    for (Bits x : w) {
      const Bits xa = pair(x, alpha), xb = pair(x, beta);
      Bits y = x;
      if (xb ^ (xa & bb)) y ^= alpha;
      if (xa) y ^= beta;
      if (y && nspan.insert(y)) next.push_back(y);
    }
    alphas.push_back(alpha);
    betas.push_back(beta);
    w = std::move(next);
  }
  SplitBasis out;
  out.half = alphas.size();
  out.split = w.empty();
  if (!out.split) out.certificate = "nondegenerate rank " + std::to_string(n - radical.size()) + " is odd";
  for (const auto* part : {&alphas, &betas, &w, &radical})
    for (Bits v : *part) out.basis.push_back(unpack(v, n));
  out.conjugated = f.restrict_to(out.basis);
  return out;
}

}  // namespace

SymmetricForm::SymmetricForm(std::vector<std::vector<std::int64_t>> gram, std::uint32_t p, std::vector<std::string> labels)
    : p_(p), labels_(std::move(labels)) {
  if (!is_prime(p)) throw ValidationError("form coefficients must be a prime field");
  const auto f = field_of(p);
  const std::size_t n = gram.size();
  for (const auto& row : gram)
    if (row.size() != n) throw ValidationError("Gram matrix is not square");
  gram_.assign(n, FieldVector(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) gram_[i][j] = f.from_int(gram[i][j]);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (gram_[i][j] != gram_[j][i]) throw ValidationError("Gram matrix is not symmetric");
  if (!labels_.empty() && labels_.size() != n) throw ValidationError("label count does not match form dimension");
}

std::uint32_t SymmetricForm::pair(const FieldVector& u, const FieldVector& v) const {
  const auto f = field_of(p_);
  std::uint32_t acc = 0;
  for (std::size_t i = 0; i < dim(); ++i) {
    if (u[i] == 0) continue;
    std::uint32_t row = 0;
    for (std::size_t j = 0; j < dim(); ++j)
      if (v[j] != 0 && gram_[i][j] != 0) row = f.add(row, f.mul(gram_[i][j], v[j]));
    acc = f.add(acc, f.mul(u[i], row));
  }
  return acc;
}

SymmetricForm SymmetricForm::restrict_to(const FieldMatrix& basis) const {
  SymmetricForm out;
  out.p_ = p_;
  out.gram_.assign(basis.size(), FieldVector(basis.size(), 0));
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i; j < basis.size(); ++j) out.gram_[i][j] = out.gram_[j][i] = pair(basis[i], basis[j]);
  return out;
}

SymmetricForm direct_sum(const SymmetricForm& a, const SymmetricForm& b) {
  if (a.prime() != b.prime()) throw ValidationError("direct sum of forms over different fields");
  const std::size_t n = a.dim() + b.dim();
  std::vector<std::vector<std::int64_t>> g(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) g[i][j] = a(i, j);
  for (std::size_t i = 0; i < b.dim(); ++i)
    for (std::size_t j = 0; j < b.dim(); ++j) g[a.dim() + i][a.dim() + j] = b(i, j);
  return SymmetricForm(std::move(g), a.prime());
}

SymmetricForm hyperbolic_plane(std::uint32_t p) { return SymmetricForm({{0, 1}, {1, 0}}, p); }

SymmetricForm diagonal_form(const std::vector<std::int64_t>& entries, std::uint32_t p) {
  std::vector<std::vector<std::int64_t>> g(entries.size(), std::vector<std::int64_t>(entries.size(), 0));
  for (std::size_t i = 0; i < entries.size(); ++i) g[i][i] = entries[i];
  return SymmetricForm(std::move(g), p);
}

std::size_t matrix_rank(FieldMatrix m, std::uint32_t p) { return echelon(m, p).size(); }

FieldMatrix null_space(const FieldMatrix& m, std::uint32_t p) {
  const auto f = field_of(p);
  if (m.empty()) return {};
  const std::size_t cols = m[0].size();
  FieldMatrix e = m;
  auto pivots = echelon(e, p);
  std::vector<char> is_pivot(cols, 0);
  for (auto c : pivots) is_pivot[c] = 1;
  FieldMatrix out;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    FieldVector v(cols, 0);
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = f.neg(e[r][free]);
    out.push_back(std::move(v));
  }
  return out;
}

RadicalReduction radical_reduce(const SymmetricForm& f) {
  RadicalReduction r;
  const std::size_t n = f.dim();
  r.radical = null_space(f.gram(), f.prime());
  r.radical_dim = r.radical.size();
  FieldMatrix span = r.radical;
  for (std::size_t i = 0; i < n && span.size() < n; ++i) {
    auto e = unit(n, i);
    if (independent_of(span, e, f.prime())) {
      span.push_back(e);
      r.complement.push_back(std::move(e));
    }
  }
  r.form = f.restrict_to(r.complement);
  return r;
}

std::size_t form_rank(const SymmetricForm& f) { return matrix_rank(f.gram(), f.prime()); }

WittClassF2 witt_class_f2(const SymmetricForm& f) {
  if (f.prime() != 2) throw ValidationError("Witt classes are implemented over F2 only");
  return WittClassF2{static_cast<int>(form_rank(f) % 2)};
}

std::optional<FieldVector> find_isotropic(const SymmetricForm& f, bool structured) {
  if (f.prime() != 2) throw ValidationError("isotropic search is implemented over F2 only");
  const std::size_t n = f.dim();
  // over F2, f(v,v) is the parity of the diagonal entries on the support of v
  if (n <= kExhaustiveIsotropicLimit && !structured) {
    std::uint32_t diag = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (f(i, i)) diag |= 1u << i;
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
      if (__builtin_popcountll(mask & diag) % 2 != 0) continue;
      FieldVector v(n, 0);
      for (std::size_t i = 0; i < n; ++i) v[i] = (mask >> i) & 1;
      return v;
    }
    return std::nullopt;
  }
  if (!structured) throw OutOfReachError("exhaustive isotropic search limited to dimension " + std::to_string(kExhaustiveIsotropicLimit));
  for (std::size_t i = 0; i < n; ++i)
    if (f(i, i) == 0) return unit(n, i);
  if (n >= 2) {
    auto v = unit(n, 0);
    v[1] = 1;
    return v;
  }
  return std::nullopt;
}

SplitBasis split_basis(const SymmetricForm& f) {
  if (f.prime() != 2) throw ValidationError("split bases are implemented over F2 only");
  const std::size_t n = f.dim();
  if (n <= 64) return split_basis_bits(f);
  auto red = radical_reduce(f);
  FieldMatrix alphas, betas;
  FieldMatrix w = red.complement;  // basis of the current nondegenerate subspace
  auto combine = [&](const FieldVector& coords, const FieldMatrix& b) {
    FieldVector v(n, 0);
    for (std::size_t i = 0; i < coords.size(); ++i)
      if (coords[i])
        for (std::size_t j = 0; j < n; ++j) v[j] ^= b[i][j];
    return v;
  };
  while (w.size() >= 2) {
    auto local = f.restrict_to(w);
    auto iso = find_isotropic(local, local.dim() > kExhaustiveIsotropicLimit);
    if (!iso) break;
    FieldVector alpha = combine(*iso, w);
    FieldVector beta;
    for (std::size_t j = w.size(); j-- > 0;)
      if (f.pair(alpha, w[j])) {
        beta = w[j];
        break;
      }
    if (beta.empty()) throw std::logic_error("split_basis: degenerate subspace");
    const auto bb = f.pair(beta, beta);
    FieldMatrix next;
    for (const auto& x : w) {
      const auto xa = f.pair(x, alpha), xb = f.pair(x, beta);
      FieldVector y = x;
      const std::uint32_t a = xb ^ (xa & bb);
      for (std::size_t j = 0; j < n; ++j) y[j] ^= (a & alpha[j]) ^ (xa & beta[j]);
      if (std::all_of(y.begin(), y.end(), [](auto c) { return c == 0; })) continue;
      if (independent_of(next, y, 2)) next.push_back(std::move(y));
    }
    alphas.push_back(std::move(alpha));
    betas.push_back(std::move(beta));
    w = std::move(next);
  }
  SplitBasis out;
  out.half = alphas.size();
  out.split = w.empty();
  if (!out.split) out.certificate = "nondegenerate rank " + std::to_string(form_rank(f)) + " is odd";
  out.basis = alphas;
  out.basis.insert(out.basis.end(), betas.begin(), betas.end());
  out.basis.insert(out.basis.end(), w.begin(), w.end());
  out.basis.insert(out.basis.end(), red.radical.begin(), red.radical.end());
  out.conjugated = f.restrict_to(out.basis);
  return out;
}

SurgeryBasis surgery_basis(const SymmetricForm& f) {
  auto s = split_basis(f);
  if (!s.split) throw ValidationError("surgery basis requires a split form: " + s.certificate);
  if (s.half == 0) throw ValidationError("surgery basis requires nondegenerate rank at least 2");
  SurgeryBasis out;
  out.alpha = s.basis[0];
  out.beta = s.basis[s.half];
  for (std::size_t i = 0; i < s.basis.size(); ++i)
    if (i != 0 && i != s.half) out.gammas.push_back(s.basis[i]);
  return out;
}

std::vector<std::string> form_rows(const SymmetricForm& f) {
  std::vector<std::string> rows;
  for (std::size_t i = 0; i < f.dim(); ++i) {
    std::string r;
    for (std::size_t j = 0; j < f.dim(); ++j) {
      if (f.prime() > 2 && j) r += ' ';
      r += std::to_string(f(i, j));
    }
    rows.push_back(std::move(r));
  }
  return rows;
}

}  // namespace witt
