#include <catch_amalgamated.hpp>

#include <cstdint>

#include "witt/errors.hpp"
#include "witt/forms.hpp"

using namespace witt;

namespace {

// Brute-force oracles over F2, using bitmasks only.
using Mask = std::uint32_t;

std::uint32_t pair_masks(const std::vector<Mask>& rows, Mask u, Mask v) {
  std::uint32_t s = 0;
  for (std::size_t i = 0; i < rows.size(); ++i)
    if (u >> i & 1) s ^= __builtin_parity(rows[i] & v);
  return s;
}

std::vector<Mask> rows_of(const SymmetricForm& f) {
  std::vector<Mask> r(f.dim(), 0);
  for (std::size_t i = 0; i < f.dim(); ++i)
    for (std::size_t j = 0; j < f.dim(); ++j)
      if (f(i, j)) r[i] |= Mask{1} << j;
  return r;
}

std::size_t oracle_rank(std::vector<Mask> rows) {
  std::size_t rank = 0;
  for (int bit = 0; bit < 32; ++bit) {
    auto it = std::find_if(rows.begin() + static_cast<long>(rank), rows.end(), [&](Mask m) { return m >> bit & 1; });
    if (it == rows.end()) continue;
    std::swap(*it, rows[rank]);
    for (std::size_t r = 0; r < rows.size(); ++r)
      if (r != rank && (rows[r] >> bit & 1)) rows[r] ^= rows[rank];
    ++rank;
  }
  return rank;
}

std::optional<Mask> oracle_isotropic(const SymmetricForm& f) {
  auto rows = rows_of(f);
  for (Mask v = 1; v < (Mask{1} << f.dim()); ++v)
    if (pair_masks(rows, v, v) == 0) return v;
  return std::nullopt;
}

SymmetricForm form_from_bits(std::size_t n, std::uint64_t bits) {
  std::vector<std::vector<std::int64_t>> g(n, std::vector<std::int64_t>(n, 0));
  std::size_t b = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j, ++b) g[i][j] = g[j][i] = static_cast<std::int64_t>(bits >> b & 1);
  return SymmetricForm(g);
}

FieldVector vec(std::initializer_list<std::uint32_t> v) { return FieldVector(v); }

}  // namespace

TEST_CASE("construction and validation") {
  CHECK_THROWS_AS(SymmetricForm({{0, 1}, {0, 0}}), ValidationError);
  CHECK_THROWS_AS(SymmetricForm({{0, 1}}), ValidationError);
  SymmetricForm f({{3, 1}, {1, -2}});
  CHECK(f(0, 0) == 1);
  CHECK(f(1, 1) == 0);
  CHECK(form_rows(hyperbolic_plane()) == std::vector<std::string>{"01", "10"});
  auto d = direct_sum(diagonal_form({1}), hyperbolic_plane());
  CHECK(form_rows(d) == std::vector<std::string>{"100", "001", "010"});
}

TEST_CASE("radical reduction") {
  auto z = radical_reduce(SymmetricForm({{0, 0, 0}, {0, 0, 0}, {0, 0, 0}}));
  CHECK(z.form.dim() == 0);
  CHECK(z.radical_dim == 3);
  auto r = radical_reduce(diagonal_form({1, 0}));
  CHECK(r.radical_dim == 1);
  CHECK(r.form == diagonal_form({1}));
  auto e = radical_reduce(SymmetricForm(std::vector<std::vector<std::int64_t>>{}));
  CHECK(e.form.dim() == 0);
  CHECK(e.radical_dim == 0);
}

TEST_CASE("witt classes") {
  CHECK(witt_class_f2(diagonal_form({1})).bit == 1);
  CHECK(witt_class_f2(hyperbolic_plane()).bit == 0);
  CHECK(witt_class_f2(diagonal_form({1, 1})).bit == 0);
  CHECK(witt_class_f2(diagonal_form({1, 1, 1})).bit == 1);
  CHECK(witt_class_f2(diagonal_form({1, 0, 0})).bit == 1);
  CHECK_THROWS_AS(witt_class_f2(diagonal_form({1}, 3)), ValidationError);
}

TEST_CASE("isotropic vectors") {
  CHECK(find_isotropic(hyperbolic_plane()) == vec({1, 0}));
  CHECK_FALSE(find_isotropic(diagonal_form({1})));
  CHECK(find_isotropic(diagonal_form({1, 1})) == vec({1, 1}));
  std::vector<std::int64_t> ones(30, 1);
  CHECK_THROWS_AS(find_isotropic(diagonal_form(ones)), OutOfReachError);
  auto big = find_isotropic(diagonal_form(ones), true);
  REQUIRE(big);
  CHECK(diagonal_form(ones).pair(*big, *big) == 0);
}

TEST_CASE("split bases") {
  auto h = split_basis(hyperbolic_plane());
  CHECK(h.split);
  CHECK(h.half == 1);
  CHECK(h.conjugated == hyperbolic_plane());

  auto s = split_basis(diagonal_form({1, 1}));
  REQUIRE(s.split);
  CHECK(s.basis == FieldMatrix{vec({1, 1}), vec({0, 1})});
  CHECK(form_rows(s.conjugated) == std::vector<std::string>{"01", "11"});
  CHECK(diagonal_form({1, 1}).restrict_to(s.basis) == s.conjugated);

  auto odd = split_basis(diagonal_form({1}));
  CHECK_FALSE(odd.split);
  CHECK_FALSE(odd.certificate.empty());
}

TEST_CASE("surgery bases") {
  auto h = surgery_basis(hyperbolic_plane());
  CHECK(h.alpha == vec({1, 0}));
  CHECK(h.beta == vec({0, 1}));
  CHECK(h.gammas.empty());

  auto d = diagonal_form({1, 1});
  auto s = surgery_basis(d);
  CHECK(s.alpha == vec({1, 1}));
  CHECK(s.beta == vec({0, 1}));
  CHECK(d.pair(s.alpha, s.alpha) == 0);
  CHECK(d.pair(s.alpha, s.beta) == 1);

  auto hh = direct_sum(hyperbolic_plane(), hyperbolic_plane());
  auto b = surgery_basis(hh);
  REQUIRE(b.gammas.size() == 2);
  CHECK(hh.pair(b.alpha, b.alpha) == 0);
  CHECK(hh.pair(b.alpha, b.beta) == 1);
  for (const auto& g : b.gammas) CHECK(hh.pair(b.alpha, g) == 0);
  FieldMatrix all{b.alpha, b.beta, b.gammas[0], b.gammas[1]};
  CHECK(matrix_rank(all, 2) == 4);
  CHECK(form_rank(hh.restrict_to(b.gammas)) == 2);

  CHECK_THROWS_AS(surgery_basis(diagonal_form({1})), ValidationError);
  CHECK_THROWS_AS(surgery_basis(diagonal_form({0, 0})), ValidationError);
}

TEST_CASE("exhaustive agreement with brute force through dimension 4") {
  for (std::size_t n = 1; n <= 4; ++n) {
    const std::uint64_t entries = n * (n + 1) / 2;
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << entries); ++bits) {
      auto f = form_from_bits(n, bits);
      const auto rows = rows_of(f);
      const std::size_t rank = oracle_rank(rows);
      CHECK(form_rank(f) == rank);
      CHECK(witt_class_f2(f).bit == static_cast<int>(rank % 2));
      auto iso = find_isotropic(f);
      auto want = oracle_isotropic(f);
      REQUIRE(iso.has_value() == want.has_value());
      if (iso) {
        Mask m = 0;
        for (std::size_t i = 0; i < n; ++i)
          if ((*iso)[i]) m |= Mask{1} << i;
        CHECK(m == *want);
      }
      auto sb = split_basis(f);
      CHECK(sb.split == (rank % 2 == 0));
      if (sb.split) {
        CHECK(matrix_rank(sb.basis, 2) == n);
        CHECK(f.restrict_to(sb.basis) == sb.conjugated);
        for (std::size_t i = 0; i < sb.half; ++i)
          for (std::size_t j = 0; j < n; ++j) {
            const std::uint32_t want_entry = (j == i + sb.half) ? 1u : 0u;
            CHECK(sb.conjugated(i, j) == want_entry);
          }
      }
    }
  }
}
