#pragma once

// Fixtures and independent oracles shared by the test binaries.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "witt/constructions.hpp"
#include "witt/homology.hpp"

namespace support {

using witt::Simplex;
using witt::SimplicialComplex;
using witt::Vertex;

inline SimplicialComplex torus7() {
  std::vector<std::vector<Vertex>> t;
  for (int i = 0; i < 7; ++i) {
    t.push_back({i, (i + 1) % 7, (i + 3) % 7});
    t.push_back({i, (i + 2) % 7, (i + 3) % 7});
  }
  return witt::build_complex(t);
}

inline SimplicialComplex boundary_of_simplex(int n) {
  std::vector<std::vector<Vertex>> f;
  for (int skip = 0; skip <= n + 1; ++skip) {
    std::vector<Vertex> s;
    for (int v = 0; v <= n + 1; ++v)
      if (v != skip) s.push_back(v);
    f.push_back(s);
  }
  return witt::build_complex(f);
}

inline SimplicialComplex rp2_6() {
  return witt::build_complex({{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 5}, {0, 1, 5},
                              {1, 2, 4}, {2, 3, 5}, {1, 3, 4}, {2, 4, 5}, {1, 3, 5}});
}

inline SimplicialComplex wedge_of_spheres(int count) {
  auto s = boundary_of_simplex(2);
  auto x = s;
  for (int i = 1; i < count; ++i) x = witt::wedge(x, 0, s, 0);
  return x;
}

/// S^2 with two vertices of its subdivision at distance 3 identified.
inline SimplicialComplex pinched_torus() {
  auto sd = witt::barycentric_subdivision(boundary_of_simplex(2));
  return witt::glue_at_points(sd.complex, {{*sd.vertex_of(Simplex({0})), *sd.vertex_of(Simplex({1, 2, 3}))}});
}

inline SimplicialComplex two_tori() {
  auto t = witt::barycentric_subdivision(torus7()).complex;
  return witt::wedge(t, 0, t, 0);
}

inline long euler_from_f_vector(const SimplicialComplex& x) {
  long chi = 0;
  const auto f = x.f_vector();
  for (std::size_t d = 0; d < f.size(); ++d) chi += (d % 2 ? -1L : 1L) * static_cast<long>(f[d]);
  return chi;
}

// ---- dense F2 oracle, written independently of the library's sparse reducers

using BitRow = std::vector<std::uint64_t>;

inline std::size_t f2_rank(std::vector<BitRow> rows, std::size_t cols) {
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    const std::size_t word = c / 64;
    const std::uint64_t bit = std::uint64_t{1} << (c % 64);
    std::size_t p = rank;
    while (p < rows.size() && !(rows[p][word] & bit)) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[rank]);
    for (std::size_t r = 0; r < rows.size(); ++r)
      if (r != rank && (rows[r][word] & bit))
        for (std::size_t w = 0; w < rows[r].size(); ++w) rows[r][w] ^= rows[rank][w];
    ++rank;
  }
  return rank;
}

/// Enumerates all simplices of `x` by dimension from its facets.
inline std::vector<std::vector<Simplex>> all_simplices(const SimplicialComplex& x) {
  std::vector<std::set<Simplex>> by_dim(x.dimension() + 1);
  for (const auto& f : x.facets()) {
    const auto& v = f.vertices();
    const std::uint32_t n = static_cast<std::uint32_t>(v.size());
    for (std::uint32_t m = 1; m < (1u << n); ++m) {
      std::vector<Vertex> s;
      for (std::uint32_t i = 0; i < n; ++i)
        if (m >> i & 1) s.push_back(v[i]);
      by_dim[s.size() - 1].insert(Simplex(s));
    }
  }
  std::vector<std::vector<Simplex>> out;
  for (auto& s : by_dim) out.emplace_back(s.begin(), s.end());
  return out;
}

/// dim H_k(x, a; F2) by dense elimination; `a` may be empty.
inline std::vector<long> f2_betti(const SimplicialComplex& x, const SimplicialComplex& a = SimplicialComplex()) {
  auto cells = all_simplices(x);
  for (auto& level : cells)
    level.erase(std::remove_if(level.begin(), level.end(), [&](const Simplex& s) { return !a.empty() && a.contains(s); }),
                level.end());
  const int n = x.dimension();
  std::vector<std::size_t> rank(n + 2, 0);  // rank of d_k : C_k -> C_{k-1}
  for (int k = 1; k <= n; ++k) {
    std::map<Simplex, std::size_t> index;
    for (std::size_t i = 0; i < cells[k - 1].size(); ++i) index[cells[k - 1][i]] = i;
    std::vector<BitRow> rows;
    for (const auto& s : cells[k]) {
      BitRow row((cells[k - 1].size() + 63) / 64 + 1, 0);
      for (std::size_t drop = 0; drop < s.size(); ++drop) {
        std::vector<Vertex> face;
        for (std::size_t j = 0; j < s.size(); ++j)
          if (j != drop) face.push_back(s[j]);
        auto it = index.find(Simplex(face));
        if (it != index.end()) row[it->second / 64] ^= std::uint64_t{1} << (it->second % 64);
      }
      rows.push_back(std::move(row));
    }
    rank[k] = f2_rank(rows, cells[k - 1].size());
  }
  std::vector<long> betti;
  for (int k = 0; k <= n; ++k)
    betti.push_back(static_cast<long>(cells[k].size()) - static_cast<long>(rank[k]) - static_cast<long>(rank[k + 1]));
  return betti;
}

/// A random relabeling of the vertices onto a sparse range.
inline std::vector<std::pair<Vertex, Vertex>> random_relabeling(const SimplicialComplex& x, std::mt19937_64& rng) {
  auto vs = x.vertices();
  std::vector<Vertex> targets(vs.size());
  std::iota(targets.begin(), targets.end(), 0);
  for (auto& t : targets) t = t * 3 + 5;
  std::shuffle(targets.begin(), targets.end(), rng);
  std::vector<std::pair<Vertex, Vertex>> m;
  for (std::size_t i = 0; i < vs.size(); ++i) m.emplace_back(vs[i], targets[i]);
  return m;
}

}  // namespace support
