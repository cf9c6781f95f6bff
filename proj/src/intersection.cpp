#include "witt/intersection.hpp"

#include <algorithm>
#include <numeric>

#include "witt/errors.hpp"

namespace witt {

Perversity::Perversity(std::vector<int> values) : values_(std::move(values)) {
  if (!values_.empty() && values_[0] != 0) throw ValidationError("perversity must vanish in codimension 2");
  for (std::size_t i = 1; i < values_.size(); ++i) {
    const int step = values_[i] - values_[i - 1];
    if (step != 0 && step != 1) throw ValidationError("perversity steps must be 0 or 1");
  }
}

int Perversity::operator()(int c) const {
  if (c < 2 || c > max_codimension()) throw ValidationError("perversity undefined in codimension " + std::to_string(c));
  return values_[c - 2];
}

Perversity middle_perversity(int n) {
  std::vector<int> v;
  for (int c = 2; c <= n; ++c) v.push_back((c - 2) / 2);
  return Perversity(std::move(v));
}

Perversity zero_perversity(int n) { return Perversity(std::vector<int>(std::max(n - 1, 0), 0)); }

Perversity top_perversity(int n) {
  std::vector<int> v;
  for (int c = 2; c <= n; ++c) v.push_back(c - 2);
  return Perversity(std::move(v));
}

bool allowable(int i, const std::vector<int>& count_by_codim, const Perversity& p) {
  for (int c = 2; c < static_cast<int>(count_by_codim.size()); ++c) {
    const int cnt = count_by_codim[c];
    if (cnt > 0 && cnt - 1 > i - c + p(c)) return false;
  }
  return true;
}

namespace {

template <class F>
IHResult ih_field(const StratifiedSpace& t, const Perversity& p, const F& f, const CoefficientSpec& coeffs, bool reps) {
  const auto& x = t.complex();
  const int n = x.dimension();
  const auto level = t.vertex_levels();
  // local indices of allowable simplices per degree, and of the rest
  std::vector<std::vector<long>> loc(n + 1), bad(n + 1);
  std::vector<std::vector<std::size_t>> cells(n + 1);
  std::vector<std::size_t> bad_count(n + 1, 0);
  std::vector<int> cnt(n + 1);
  for (int i = 0; i <= n; ++i) {
    loc[i].assign(x.count(i), -1);
    bad[i].assign(x.count(i), -1);
    for (std::size_t g = 0; g < x.count(i); ++g) {
      std::fill(cnt.begin(), cnt.end(), 0);
      for (Vertex v : x.face(i, g)) {
        // v lies in X_{n-c} for all c ≤ n - level
        for (int c = 2; c <= n - level[v]; ++c) ++cnt[c];
      }
      if (allowable(i, cnt, p)) {
        loc[i][g] = static_cast<long>(cells[i].size());
        cells[i].push_back(g);
      } else {
        bad[i][g] = static_cast<long>(bad_count[i]++);
      }
    }
  }
  // boundary columns of A_i split into allowable rows, other rows, and both
  struct Split {
    std::vector<SparseVector<F>> good, bad, full;
  };
  std::vector<Vertex> sub;
  auto split = [&](int i) {
    Split out;
    const std::size_t a = i > 0 ? cells[i - 1].size() : 0;
    out.good.resize(cells[i].size());
    out.bad.resize(cells[i].size());
    out.full.resize(cells[i].size());
    if (i == 0) return out;
    for (std::size_t j = 0; j < cells[i].size(); ++j) {
      auto s = x.face(i, cells[i][j]);
      sub.resize(s.size() - 1);
      for (std::size_t o = 0; o < s.size(); ++o) {
        std::size_t w = 0;
        for (std::size_t q = 0; q < s.size(); ++q)
          if (q != o) sub[w++] = s[q];
        const auto g = *x.index_of(sub);
        const auto val = f.from_int(o % 2 ? -1 : 1);
        if (loc[i - 1][g] >= 0) {
          out.good[j].emplace_back(static_cast<std::uint32_t>(loc[i - 1][g]), val);
          out.full[j].emplace_back(static_cast<std::uint32_t>(loc[i - 1][g]), val);
        } else {
          out.bad[j].emplace_back(static_cast<std::uint32_t>(bad[i - 1][g]), val);
          out.full[j].emplace_back(static_cast<std::uint32_t>(a + bad[i - 1][g]), val);
        }
      }
      std::sort(out.good[j].begin(), out.good[j].end());
      std::sort(out.bad[j].begin(), out.bad[j].end());
      std::sort(out.full[j].begin(), out.full[j].end());
    }
    return out;
  };
  auto ambient = [&](int i) { return i > 0 ? cells[i - 1].size() + bad_count[i - 1] : 0; };

  if (!reps) {
    // dim IH_i = |A_i| - rk(∂ on A_i) - rk(∂ on A_{i+1}) + rk(non-allowable part of ∂ on A_{i+1})
    std::vector<long> rank_full(n + 2, 0), rank_bad(n + 2, 0);
    for (int i = 1; i <= n; ++i) {
      auto sp = split(i);
      rank_full[i] = static_cast<long>(rank_of(f, ambient(i), std::move(sp.full)));
      rank_bad[i] = static_cast<long>(rank_of(f, bad_count[i - 1], std::move(sp.bad)));
    }
    IHResult r;
    r.coeffs = coeffs;
    r.complex = x;
    r.representatives.resize(n + 1);
    for (int i = 0; i <= n; ++i)
      r.dims.push_back(static_cast<long>(cells[i].size()) - rank_full[i] - rank_full[i + 1] + rank_bad[i + 1]);
    return r;
  }

  // per degree: cycles in span A_i, and boundaries of the IH chains of degree i
  std::vector<std::vector<SparseVector<F>>> cycles(n + 1), boundaries(n + 1);
  for (int i = 0; i <= n; ++i) {
    auto sp = split(i);
    cycles[i] = kernel_of(f, ambient(i), std::move(sp.full));
    if (i > 0) {
      auto chains = kernel_of(f, bad_count[i - 1], std::move(sp.bad));
      for (const auto& xi : chains) {
        SparseVector<F> b;
        for (const auto& [j, c] : xi) axpy(f, b, c, sp.good[j]);
        if (!b.empty()) boundaries[i - 1].push_back(std::move(b));
      }
    }
  }
  IHResult r;
  r.coeffs = coeffs;
  r.complex = x;
  r.representatives.resize(n + 1);
  for (int i = 0; i <= n; ++i) {
    ClassBasis<F> basis(f, cells[i].size());
    for (auto& b : boundaries[i]) basis.add_boundary(std::move(b));
    for (auto& z : cycles[i]) basis.add_cycle(std::move(z));
    r.dims.push_back(static_cast<long>(basis.rank()));
    for (const auto& v : basis.representatives()) {
      Chain c{i, std::vector<std::int64_t>(x.count(i), 0)};
      for (const auto& [j, val] : v) {
        if constexpr (std::is_same_v<F, PrimeField>)
          c.coefficients[cells[i][j]] = f.to_int(val);
        else
          c.coefficients[cells[i][j]] = val.get_num().get_si();
      }
      r.representatives[i].push_back(std::move(c));
    }
  }
  return r;
}

}  // namespace

IHResult intersection_homology(const StratifiedSpace& s, const Perversity& p, const CoefficientSpec& coeffs,
                               const IHOptions& options) {
  if (!coeffs.is_field()) throw ValidationError("intersection homology requires field coefficients");
  const int n = s.dimension();
  if (n >= 2 && p.max_codimension() < n) throw ValidationError("perversity is not defined up to codimension " + std::to_string(n));
  if (s.is_trivial()) {
    auto h = homology(s.complex(), coeffs);
    IHResult r;
    r.coeffs = coeffs;
    r.dims = h.betti;
    r.complex = s.complex();
    if (options.representatives) r.representatives = h.representatives;
    return r;
  }
  const StratifiedSpace t = options.subdivide ? subdivide(s).space : s;
  return with_field(coeffs, [&](const auto& f) { return ih_field(t, p, f, coeffs, options.representatives); });
}

namespace {

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

}  // namespace

WittReport witt_condition_check(const StratifiedSpace& s, const CoefficientSpec& coeffs, const SimplicialComplex& skip_boundary) {
  WittReport report;
  const int n = s.dimension();
  if (n <= 1 || s.is_trivial()) return report;
  auto sd = subdivide(s);
  const auto& t = sd.space;
  const auto& x = t.complex();
  const auto bnd = skip_boundary.empty() ? SimplicialComplex() : sd.map.carry(skip_boundary);
  LinkIndex index(x);
  for (int sdim = 0; sdim <= n - 2; ++sdim) {
    const auto& xs = t.skeleton(sdim);
    const auto& below = t.skeleton(sdim - 1);
    std::vector<std::size_t> simplices;  // indices into x's sdim-faces
    for (std::size_t g = 0; g < x.count(sdim); ++g) {
      auto f = x.face(sdim, g);
      if (xs.contains(f) && !below.contains(f)) simplices.push_back(g);
    }
    if (simplices.empty()) continue;
    UnionFind uf(simplices.size());
    if (sdim > 0) {
      std::map<std::vector<Vertex>, std::size_t> owner;
      std::vector<Vertex> sub;
      for (std::size_t j = 0; j < simplices.size(); ++j) {
        auto f = x.face(sdim, simplices[j]);
        for (std::size_t o = 0; o < f.size(); ++o) {
          sub.clear();
          for (std::size_t q = 0; q < f.size(); ++q)
            if (q != o) sub.push_back(f[q]);
          if (below.contains(sub)) continue;
          auto [it, fresh] = owner.emplace(sub, j);
          if (!fresh) uf.unite(it->second, j);
        }
      }
    }
    std::map<std::size_t, std::vector<std::size_t>> components;
    for (std::size_t j = 0; j < simplices.size(); ++j) components[uf.find(j)].push_back(simplices[j]);
    const int link_dim = n - sdim - 1;
    const bool condition = link_dim % 2 == 0 && link_dim > 0;
    for (const auto& [root, members] : components) {
      StratumReport sr;
      sr.stratum_dimension = sdim;
      sr.has_condition = condition;
      sr.k = condition ? link_dim / 2 : 0;
      sr.simplices = members.size();
      for (Vertex v : x.face(sdim, members.front())) sr.witness.push_back(sd.map.origin[v]);
      std::vector<std::size_t> interior;
      for (auto g : members)
        if (bnd.empty() || !bnd.contains(x.face(sdim, g))) interior.push_back(g);
      if (interior.empty()) {
        sr.in_boundary = true;
        sr.detail = "boundary stratum, not checked";
        report.strata.push_back(std::move(sr));
        continue;
      }
      if (!condition) {
        sr.detail = "no condition: link dimension " + std::to_string(link_dim);
        report.strata.push_back(std::move(sr));
        continue;
      }
      std::optional<long> seen;
      for (auto g : interior) {
        auto f = x.face(sdim, g);
        auto l = index.link(f);
        std::map<int, SimplicialComplex> decl;
        for (int j = 0; j < link_dim; ++j) decl[j] = intersection_of(l, t.skeleton(j + sdim + 1));
        auto ls = stratify(l, decl);
        auto ih = intersection_homology(ls, middle_perversity(link_dim), coeffs);
        const long d = ih.dim(sr.k);
        if (seen && *seen != d) {
          report.errors.push_back("links of one stratum of dimension " + std::to_string(sdim) +
                                  " disagree: " + std::to_string(*seen) + " vs " + std::to_string(d));
          report.pass = false;
        }
        if (!seen) seen = d;
      }
      sr.link_ih = *seen;
      sr.pass = sr.link_ih == 0;
      sr.detail = "dim IH_" + std::to_string(sr.k) + "(link) = " + std::to_string(sr.link_ih);
      if (!sr.pass) report.pass = false;
      report.strata.push_back(std::move(sr));
    }
  }
  return report;
}

WittVerdict is_witt_space(const StratifiedSpace& s, const CoefficientSpec& coeffs, OrientationMode mode) {
  WittVerdict v;
  const auto& x = s.complex();
  auto pm = is_pseudomanifold(x, false);
  v.pseudomanifold = pm.ok;
  v.pseudomanifold_detail = pm.reason;
  if (!pm.ok) return v;
  v.oriented = mode == OrientationMode::Z2 || orient(x).orientable();
  const auto bnd = x.dimension() >= 1 ? boundary_subcomplex(x) : SimplicialComplex();
  v.report = witt_condition_check(s, coeffs, bnd);
  v.witt = v.pseudomanifold && v.oriented && v.report.pass;
  return v;
}

}  // namespace witt
