#pragma once

// Sparse exact linear algebra over a field: column reduction with pivot
// tables, kernels, and bases of cycle spaces modulo boundary spaces.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "witt/field.hpp"

namespace witt {

template <class F>
using SparseVector = std::vector<std::pair<std::uint32_t, typename F::value_type>>;

/// y += a * x, both sorted by index.
template <class F>
void axpy(const F& f, SparseVector<F>& y, const typename F::value_type& a, const SparseVector<F>& x) {
  if (f.is_zero(a) || x.empty()) return;
  SparseVector<F> out;
  out.reserve(y.size() + x.size());
  auto i = y.begin(), j = x.begin();
  while (i != y.end() || j != x.end()) {
    if (j == x.end() || (i != y.end() && i->first < j->first)) {
      out.push_back(std::move(*i++));
    } else if (i == y.end() || j->first < i->first) {
      out.emplace_back(j->first, f.mul(a, j->second));
      ++j;
    } else {
      auto v = f.add(i->second, f.mul(a, j->second));
      if (!f.is_zero(v)) out.emplace_back(i->first, std::move(v));
      ++i;
      ++j;
    }
  }
  y = std::move(out);
}

template <class F>
void scale(const F& f, SparseVector<F>& v, const typename F::value_type& a) {
  for (auto& e : v) e.second = f.mul(e.second, a);
}

template <class F>
SparseVector<F> unit_vector(const F& f, std::uint32_t i) {
  return {{i, f.one()}};
}

/// Set of reduced columns indexed by their pivot (largest index). Every stored
/// column has pivot coefficient one. Each column may carry a tag, a vector in
/// a second space recording how the column was formed.
template <class F>
class ColumnReducer {
 public:
  using value_type = typename F::value_type;
  struct Column {
    SparseVector<F> vec;
    SparseVector<F> tag;
    long label;
  };

  ColumnReducer(F field, std::size_t ambient) : f_(std::move(field)), pivot_of_(ambient, -1) {}

  const F& field() const { return f_; }
  std::size_t size() const { return columns_.size(); }
  std::size_t ambient() const { return pivot_of_.size(); }
  const Column& column(std::size_t i) const { return columns_[i]; }
  std::optional<std::size_t> pivot_column(std::uint32_t row) const {
    auto c = pivot_of_[row];
    return c < 0 ? std::nullopt : std::optional<std::size_t>(static_cast<std::size_t>(c));
  }

  /// Eliminates pivot entries of v. With full=false only the last entry is
  /// driven down; with full=true every entry that hits a pivot is removed.
  /// on_use(column, coefficient) reports each subtraction v -= coefficient * column.
  template <class OnUse>
  void reduce(SparseVector<F>& v, SparseVector<F>* tag, bool full, OnUse&& on_use) const {
    std::uint32_t bound = std::numeric_limits<std::uint32_t>::max();
    while (!v.empty()) {
      // largest index below bound that carries a pivot
      auto it = std::lower_bound(v.begin(), v.end(), bound, [](const auto& e, std::uint32_t b) { return e.first < b; });
      std::optional<std::size_t> hit;
      std::uint32_t row = 0;
      while (it != v.begin()) {
        --it;
        auto c = pivot_of_[it->first];
        if (c >= 0) {
          hit = static_cast<std::size_t>(c);
          row = it->first;
          break;
        }
        if (!full) break;
      }
      if (!hit) break;
      const auto coef = it->second;
      const auto& col = columns_[*hit];
      on_use(*hit, coef);
      const auto minus = f_.neg(coef);
      axpy(f_, v, minus, col.vec);
      if (tag) axpy(f_, *tag, minus, col.tag);
      bound = full ? row : std::numeric_limits<std::uint32_t>::max();
    }
  }
  void reduce(SparseVector<F>& v, SparseVector<F>* tag = nullptr, bool full = false) const {
    reduce(v, tag, full, [](std::size_t, const value_type&) {});
  }

  /// Stores a nonzero vector whose pivot is free. Returns its column id.
  std::size_t insert(SparseVector<F> v, SparseVector<F> tag = {}, long label = -1) {
    if (v.empty()) throw std::logic_error("ColumnReducer::insert: zero vector");
    const auto row = v.back().first;
    if (pivot_of_[row] >= 0) throw std::logic_error("ColumnReducer::insert: pivot taken");
    const auto inv = f_.inv(v.back().second);
    scale(f_, v, inv);
    scale(f_, tag, inv);
    pivot_of_[row] = static_cast<long>(columns_.size());
    columns_.push_back({std::move(v), std::move(tag), label});
    return columns_.size() - 1;
  }

 private:
  F f_;
  std::vector<long> pivot_of_;
  std::vector<Column> columns_;
};

/// Rank of a list of column vectors in a space of the given dimension.
template <class F>
std::size_t rank_of(const F& f, std::size_t ambient, std::vector<SparseVector<F>> columns) {
  ColumnReducer<F> red(f, ambient);
  for (auto& c : columns) {
    red.reduce(c);
    if (!c.empty()) red.insert(std::move(c));
  }
  return red.size();
}

/// Basis of the kernel of the map whose j-th column is columns[j].
template <class F>
std::vector<SparseVector<F>> kernel_of(const F& f, std::size_t ambient, std::vector<SparseVector<F>> columns) {
  ColumnReducer<F> red(f, ambient);
  std::vector<SparseVector<F>> kernel;
  for (std::size_t j = 0; j < columns.size(); ++j) {
    auto tag = unit_vector(f, static_cast<std::uint32_t>(j));
    red.reduce(columns[j], &tag);
    if (columns[j].empty())
      kernel.push_back(std::move(tag));
    else
      red.insert(std::move(columns[j]), std::move(tag));
  }
  return kernel;
}

/// A subquotient basis: cycles modulo boundaries in one degree. Boundaries
/// must all be added before the first cycle so that representatives are
/// reduced against the full boundary space.
template <class F>
class ClassBasis {
 public:
  using value_type = typename F::value_type;

  ClassBasis(F field, std::size_t ambient) : red_(std::move(field), ambient) {}

  const F& field() const { return red_.field(); }
  std::size_t ambient() const { return red_.ambient(); }

  void add_boundary(SparseVector<F> v) {
    if (!reps_.empty()) throw std::logic_error("ClassBasis: boundary added after cycles");
    red_.reduce(v);
    if (!v.empty()) {
      red_.insert(std::move(v));
      ++boundary_rank_;
    }
  }

  /// Adds v as a new class if it is independent of what is already spanned.
  bool add_cycle(SparseVector<F> v) {
    red_.reduce(v, nullptr, true);
    if (v.empty()) return false;
    auto id = red_.insert(v, {}, static_cast<long>(reps_.size()));
    reps_.push_back(red_.column(id).vec);
    return true;
  }

  std::size_t rank() const { return reps_.size(); }
  std::size_t boundary_rank() const { return boundary_rank_; }
  const SparseVector<F>& representative(std::size_t i) const { return reps_[i]; }
  const std::vector<SparseVector<F>>& representatives() const { return reps_; }

  /// Coordinates of a cycle in the class basis; nullopt if v is not in
  /// the span of boundaries and classes.
  std::optional<std::vector<value_type>> coordinates(SparseVector<F> v) const {
    const F& f = field();
    std::vector<value_type> coords(reps_.size(), f.zero());
    red_.reduce(v, nullptr, false, [&](std::size_t col, const value_type& c) {
      long label = red_.column(col).label;
      if (label >= 0) coords[label] = f.add(coords[label], c);
    });
    if (!v.empty()) return std::nullopt;
    return coords;
  }

  bool is_boundary(const SparseVector<F>& v) const {
    auto c = coordinates(v);
    return c && std::all_of(c->begin(), c->end(), [&](const value_type& x) { return field().is_zero(x); });
  }

 private:
  ColumnReducer<F> red_;
  std::vector<SparseVector<F>> reps_;
  std::size_t boundary_rank_ = 0;
};

}  // namespace witt
