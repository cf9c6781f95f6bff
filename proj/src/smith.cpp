// Invariant factors of sparse integer matrices.
//
// Stage 1 eliminates unit pivots chosen as the lowest entry of each column;
// stage 2 eliminates any remaining unit entries with a minimal-fill rule;
// stage 3 diagonalizes the leftover block densely with GMP integers.
// Stages 1 and 2 run on checked 64-bit integers and restart on GMP integers
// if an entry overflows.

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "witt/errors.hpp"
#include "witt/homology.hpp"

namespace witt {
namespace {

struct Overflow {};

template <class Int>
struct IntOps;

template <>
struct IntOps<long> {
  static bool is_unit(long a) { return a == 1 || a == -1; }
  static bool is_zero(long a) { return a == 0; }
  // a - b * c
  static long mul_sub(long a, long b, long c) {
    long prod, out;
    if (__builtin_mul_overflow(b, c, &prod) || __builtin_sub_overflow(a, prod, &out)) throw Overflow{};
    return out;
  }
  static long mul(long a, long b) {
    long out;
    if (__builtin_mul_overflow(a, b, &out)) throw Overflow{};
    return out;
  }
  static mpz_class to_mpz(long a) { return mpz_class(a); }
  static long from_long(long a) { return a; }
};

template <>
struct IntOps<mpz_class> {
  static bool is_unit(const mpz_class& a) { return a == 1 || a == -1; }
  static bool is_zero(const mpz_class& a) { return sgn(a) == 0; }
  static mpz_class mul_sub(const mpz_class& a, const mpz_class& b, const mpz_class& c) { return a - b * c; }
  static mpz_class mul(const mpz_class& a, const mpz_class& b) { return a * b; }
  static mpz_class to_mpz(const mpz_class& a) { return a; }
  static mpz_class from_long(long a) { return mpz_class(a); }
};

template <class Int>
using IntColumn = std::vector<std::pair<std::uint32_t, Int>>;

// y -= c * x
template <class Int>
void sub_multiple(IntColumn<Int>& y, const Int& c, const IntColumn<Int>& x) {
  using Ops = IntOps<Int>;
  IntColumn<Int> out;
  out.reserve(y.size() + x.size());
  auto i = y.begin(), j = x.begin();
  const Int zero = Ops::from_long(0);
  while (i != y.end() || j != x.end()) {
    if (j == x.end() || (i != y.end() && i->first < j->first)) {
      out.push_back(std::move(*i++));
    } else if (i == y.end() || j->first < i->first) {
      out.emplace_back(j->first, Ops::mul_sub(zero, c, j->second));
      ++j;
    } else {
      Int v = Ops::mul_sub(i->second, c, j->second);
      if (!Ops::is_zero(v)) out.emplace_back(i->first, std::move(v));
      ++i;
      ++j;
    }
  }
  y = std::move(out);
}

template <class Int>
const Int* entry_at(const IntColumn<Int>& c, std::uint32_t row) {
  auto it = std::lower_bound(c.begin(), c.end(), row, [](const auto& e, std::uint32_t r) { return e.first < r; });
  return it != c.end() && it->first == row ? &it->second : nullptr;
}

std::vector<mpz_class> dense_diagonal(std::vector<std::vector<mpz_class>> m) {
  std::vector<mpz_class> diag;
  std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
  std::size_t t = 0;
  while (t < rows && t < cols) {
    // smallest nonzero entry in the trailing block
    std::size_t pr = rows, pc = cols;
    for (std::size_t r = t; r < rows; ++r)
      for (std::size_t c = t; c < cols; ++c)
        if (sgn(m[r][c]) != 0 && (pr == rows || abs(m[r][c]) < abs(m[pr][pc]))) {
          pr = r;
          pc = c;
        }
    if (pr == rows) break;
    std::swap(m[t], m[pr]);
    for (auto& row : m) std::swap(row[t], row[pc]);
    bool clean = false;
    while (!clean) {
      clean = true;
      for (std::size_t r = t + 1; r < rows; ++r) {
        if (sgn(m[r][t]) == 0) continue;
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), m[r][t].get_mpz_t(), m[t][t].get_mpz_t());
        for (std::size_t c = t; c < cols; ++c) m[r][c] -= q * m[t][c];
        if (sgn(m[r][t]) != 0) {
          std::swap(m[t], m[r]);
          clean = false;
        }
      }
      for (std::size_t c = t + 1; c < cols; ++c) {
        if (sgn(m[t][c]) == 0) continue;
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), m[t][c].get_mpz_t(), m[t][t].get_mpz_t());
        for (std::size_t r = t; r < rows; ++r) m[r][c] -= q * m[r][t];
        if (sgn(m[t][c]) != 0) {
          for (auto& row : m) std::swap(row[t], row[c]);
          clean = false;
        }
      }
    }
    diag.push_back(abs(m[t][t]));
    ++t;
  }
  return diag;
}

template <class Int>
std::vector<mpz_class> factors_impl(std::size_t rows, const std::vector<std::vector<std::pair<std::uint32_t, long>>>& input) {
  using Ops = IntOps<Int>;
  std::vector<IntColumn<Int>> cols(input.size());
  for (std::size_t j = 0; j < input.size(); ++j)
    for (auto [r, v] : input[j])
      if (v != 0) cols[j].emplace_back(r, Ops::from_long(v));
  for (auto& c : cols) std::sort(c.begin(), c.end(), [](const auto& a, const auto& b) { return a.first < b.first; });

  std::size_t units = 0;
  std::vector<long> pivot_of(rows, -1);
  std::vector<std::size_t> deferred;
  // stage 1: lowest-entry unit pivots
  for (std::size_t j = 0; j < cols.size(); ++j) {
    auto& c = cols[j];
    while (!c.empty()) {
      const auto row = c.back().first;
      if (pivot_of[row] >= 0) {
        const auto& p = cols[pivot_of[row]];
        // p's pivot is a unit u = u^-1, so c -= (c_row * u) * p clears the row
        sub_multiple(c, Ops::mul(c.back().second, p.back().second), p);
        continue;
      }
      if (Ops::is_unit(c.back().second)) {
        pivot_of[row] = static_cast<long>(j);
        ++units;
      } else {
        deferred.push_back(j);
      }
      break;
    }
  }
  // clear pivot rows from deferred columns, highest row first
  std::vector<IntColumn<Int>> rest;
  for (auto j : deferred) {
    auto c = std::move(cols[j]);
    std::uint32_t bound = static_cast<std::uint32_t>(rows);
    while (true) {
      auto it = std::lower_bound(c.begin(), c.end(), bound, [](const auto& e, std::uint32_t b) { return e.first < b; });
      bool hit = false;
      while (it != c.begin()) {
        --it;
        if (pivot_of[it->first] >= 0) {
          hit = true;
          break;
        }
      }
      if (!hit) break;
      const auto row = it->first;
      const auto& p = cols[pivot_of[row]];
      sub_multiple(c, Ops::mul(it->second, p.back().second), p);
      bound = row;
    }
    if (!c.empty()) rest.push_back(std::move(c));
  }
  // stage 2: any unit entry, minimal Markowitz cost
  std::map<std::uint32_t, std::set<std::size_t>> row_cols;
  for (std::size_t j = 0; j < rest.size(); ++j)
    for (const auto& e : rest[j]) row_cols[e.first].insert(j);
  std::vector<char> alive(rest.size(), 1);
  while (true) {
    std::size_t best_c = rest.size();
    std::uint32_t best_r = 0;
    std::size_t best_cost = ~std::size_t{0};
    for (std::size_t j = 0; j < rest.size(); ++j) {
      if (!alive[j]) continue;
      for (const auto& e : rest[j]) {
        if (!Ops::is_unit(e.second)) continue;
        std::size_t cost = (rest[j].size() - 1) * (row_cols[e.first].size() - 1);
        if (cost < best_cost) {
          best_cost = cost;
          best_c = j;
          best_r = e.first;
        }
      }
    }
    if (best_c == rest.size()) break;
    const auto pivot_col = rest[best_c];
    const Int u = *entry_at(pivot_col, best_r);
    std::vector<std::size_t> touched(row_cols[best_r].begin(), row_cols[best_r].end());
    for (auto j : touched) {
      if (j == best_c) continue;
      for (const auto& e : rest[j]) row_cols[e.first].erase(j);
      const Int coef = Ops::mul(*entry_at(rest[j], best_r), u);
      sub_multiple(rest[j], coef, pivot_col);
      for (const auto& e : rest[j]) row_cols[e.first].insert(j);
    }
    for (const auto& e : rest[best_c]) row_cols[e.first].erase(best_c);
    row_cols.erase(best_r);
    alive[best_c] = 0;
    ++units;
  }

  // stage 3: dense remainder
  std::vector<std::uint32_t> live_rows;
  for (const auto& [r, s] : row_cols)
    if (!s.empty()) live_rows.push_back(r);
  std::vector<std::size_t> live_cols;
  for (std::size_t j = 0; j < rest.size(); ++j)
    if (alive[j] && !rest[j].empty()) live_cols.push_back(j);
  std::vector<std::vector<mpz_class>> dense(live_rows.size(), std::vector<mpz_class>(live_cols.size()));
  for (std::size_t c = 0; c < live_cols.size(); ++c)
    for (const auto& e : rest[live_cols[c]]) {
      auto r = std::lower_bound(live_rows.begin(), live_rows.end(), e.first) - live_rows.begin();
      dense[r][c] = Ops::to_mpz(e.second);
    }
  std::vector<mpz_class> out(units, mpz_class(1));
  for (auto& d : dense_diagonal(std::move(dense))) out.push_back(d);
  return out;
}

}  // namespace

std::vector<mpz_class> diagonal_factors(std::size_t rows,
                                         const std::vector<std::vector<std::pair<std::uint32_t, long>>>& columns) {
  try {
    return factors_impl<long>(rows, columns);
  } catch (const Overflow&) {
    return factors_impl<mpz_class>(rows, columns);
  }
}

std::vector<std::uint64_t> elementary_divisors(const std::vector<mpz_class>& factors) {
  std::vector<std::uint64_t> out;
  for (mpz_class n : factors) {
    if (n <= 1) continue;
    if (!n.fits_ulong_p()) throw OutOfReachError("torsion coefficient exceeds 64 bits");
    std::uint64_t m = n.get_ui();
    for (std::uint64_t p = 2; p * p <= m; ++p) {
      if (m % p) continue;
      std::uint64_t q = 1;
      while (m % p == 0) {
        m /= p;
        q *= p;
      }
      out.push_back(q);
    }
    if (m > 1) out.push_back(m);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace witt
