#include "witt/stratified.hpp"

#include <algorithm>
#include <numeric>

#include "witt/errors.hpp"
#include "witt/homology.hpp"

namespace witt {

StratifiedSpace::StratifiedSpace(SimplicialComplex x, std::vector<SimplicialComplex> filtration)
    : x_(std::move(x)), filtration_(std::move(filtration)) {}

const SimplicialComplex& StratifiedSpace::skeleton(int d) const {
  if (d < 0) return empty_;
  if (d >= dimension()) return x_;
  return filtration_[d];
}

std::vector<int> StratifiedSpace::vertex_levels() const {
  const int n = dimension();
  std::vector<int> level(x_.empty() ? 0 : x_.max_vertex() + 1, n);
  for (int d = n - 1; d >= 0; --d)
    for (Vertex v : skeleton(d).vertices()) level[v] = d;
  return level;
}

StratifiedSpace stratify(const SimplicialComplex& x, const std::map<int, SimplicialComplex>& declared) {
  if (x.empty()) throw ValidationError("stratification of the empty complex");
  const int n = x.dimension();
  if (!x.is_pure()) throw ValidationError("complex is not pure: top simplices are not dense");
  for (const auto& [d, sub] : declared) {
    if (d < 0 || d > n) throw ValidationError("filtration index X" + std::to_string(d) + " outside 0.." + std::to_string(n));
    if (!x.has_subcomplex(sub)) throw ValidationError("X" + std::to_string(d) + " is not a subcomplex");
    if (sub.dimension() > d) throw ValidationError("X" + std::to_string(d) + " has dimension " + std::to_string(sub.dimension()));
  }
  if (auto it = declared.find(n); it != declared.end() && !(it->second == x))
    throw ValidationError("X" + std::to_string(n) + " must be the whole complex");
  std::vector<SimplicialComplex> filt(n + 1);
  SimplicialComplex current;
  for (int d = 0; d < n; ++d) {
    if (auto it = declared.find(d); it != declared.end()) {
      if (!it->second.has_subcomplex(current))
        throw ValidationError("filtration is not nested at X" + std::to_string(d));
      current = it->second;
    }
    filt[d] = current;
  }
  filt[n] = x;
  if (n >= 1 && !(filt[n - 1] == (n >= 2 ? filt[n - 2] : SimplicialComplex())))
    throw ValidationError("codimension-one stratum is nonempty");
  return StratifiedSpace(x, std::move(filt));
}

StratifiedSpace trivial_stratification(const SimplicialComplex& x) { return stratify(x, {}); }

LinkIndex::LinkIndex(const SimplicialComplex& x) : x_(&x) {
  incidence_.resize(x.empty() ? 0 : x.max_vertex() + 1);
  const auto& facets = x.facets();
  for (std::size_t i = 0; i < facets.size(); ++i)
    for (Vertex v : facets[i]) incidence_[v].push_back(i);
}

std::vector<std::size_t> LinkIndex::star_facets(std::span<const Vertex> s) const {
  if (s.empty()) {
    std::vector<std::size_t> all(x_->facets().size());
    std::iota(all.begin(), all.end(), 0);
    return all;
  }
  const std::vector<std::size_t>* best = nullptr;
  for (Vertex v : s) {
    if (v < 0 || static_cast<std::size_t>(v) >= incidence_.size()) return {};
    if (!best || incidence_[v].size() < best->size()) best = &incidence_[v];
  }
  std::vector<std::size_t> out;
  for (auto i : *best) {
    const auto& f = x_->facets()[i];
    if (std::includes(f.begin(), f.end(), s.begin(), s.end())) out.push_back(i);
  }
  return out;
}

SimplicialComplex LinkIndex::link(std::span<const Vertex> s) const {
  std::vector<Simplex> out;
  for (auto i : star_facets(s)) {
    const auto& f = x_->facets()[i];
    std::vector<Vertex> rest;
    std::set_difference(f.begin(), f.end(), s.begin(), s.end(), std::back_inserter(rest));
    if (!rest.empty()) out.emplace_back(std::move(rest));
  }
  return SimplicialComplex(std::move(out));
}

namespace {

// Graph links: sphere = connected 2-regular, ball = tree.
LinkSignature graph_signature(const SimplicialComplex& l) {
  if (!l.is_pure()) return LinkSignature::Other;
  const auto verts = l.vertices();
  const std::size_t e = l.count(1);
  if (connected_components(l).size() != 1) return LinkSignature::Other;
  if (e + 1 == verts.size()) return LinkSignature::Ball;
  std::map<Vertex, int> degree;
  for (std::size_t i = 0; i < e; ++i)
    for (Vertex v : l.face(1, i)) ++degree[v];
  const bool cycle = std::all_of(degree.begin(), degree.end(), [](const auto& kv) { return kv.second == 2; });
  return cycle ? LinkSignature::Sphere : LinkSignature::Other;
}

}  // namespace

LinkSignature link_signature(const SimplicialComplex& l, int dim) {
  if (l.empty()) return dim == -1 ? LinkSignature::Sphere : LinkSignature::Other;
  if (l.dimension() != dim) return LinkSignature::Other;
  if (dim == 0) {
    const auto nv = l.count(0);
    return nv == 2 ? LinkSignature::Sphere : nv == 1 ? LinkSignature::Ball : LinkSignature::Other;
  }
  if (dim == 1) return graph_signature(l);
  auto h = homology(l, CoefficientSpec::integers());
  for (const auto& t : h.torsion)
    if (!t.empty()) return LinkSignature::Other;
  for (int k = 1; k < dim; ++k)
    if (h.dim(k) != 0) return LinkSignature::Other;
  if (h.dim(0) != 1) return LinkSignature::Other;
  if (h.dim(dim) == 1) return LinkSignature::Sphere;
  if (h.dim(dim) == 0) return LinkSignature::Ball;
  return LinkSignature::Other;
}

CandidateStratification candidate_stratification(const SimplicialComplex& x) {
  auto verdict = is_pseudomanifold(x, false);
  if (!verdict.ok) throw ValidationError("not a pseudomanifold: " + verdict.reason);
  const int n = x.dimension();
  CandidateStratification out;
  out.heuristic = n >= 5;
  if (n <= 1) {
    out.space = trivial_stratification(x);
    return out;
  }
  const auto bnd = boundary_subcomplex(x);
  LinkIndex index(x);
  // simplices already known to be singular (faces of failures)
  std::vector<std::vector<char>> singular(n + 1);
  for (int d = 0; d <= n; ++d) singular[d].assign(x.count(d), 0);
  auto mark_faces = [&](std::span<const Vertex> s) {
    std::vector<Vertex> sub;
    for (unsigned mask = 1; mask < (1u << s.size()); ++mask) {
      sub.clear();
      for (std::size_t i = 0; i < s.size(); ++i)
        if (mask & (1u << i)) sub.push_back(s[i]);
      singular[sub.size() - 1][*x.index_of(sub)] = 1;
    }
  };
  std::vector<Simplex> failing;
  for (int d = n - 2; d >= 0; --d) {
    for (std::size_t i = 0; i < x.count(d); ++i) {
      if (singular[d][i]) continue;
      auto s = x.face(d, i);
      const bool on_boundary = bnd.contains(s);
      auto sig = link_signature(index.link(s), n - d - 1);
      const auto want = on_boundary ? LinkSignature::Ball : LinkSignature::Sphere;
      if (sig != want) {
        failing.emplace_back(s);
        mark_faces(s);
      }
    }
  }
  std::sort(failing.begin(), failing.end());
  out.failing = failing;
  std::map<int, SimplicialComplex> declared;
  SimplicialComplex upper(failing);
  declared[n - 2] = upper;
  for (int j = n - 3; j >= 0; --j) {
    if (upper.empty()) break;
    LinkIndex sub_index(upper);
    std::vector<Simplex> lower;
    for (int d = 0; d <= std::min(j, upper.dimension()); ++d)
      for (std::size_t i = 0; i < upper.count(d); ++i) {
        auto s = upper.face(d, i);
        if (link_signature(sub_index.link(s), j - d) != LinkSignature::Sphere) lower.emplace_back(s);
      }
    upper = SimplicialComplex(std::move(lower));
    declared[j] = upper;
  }
  out.space = stratify(x, declared);
  return out;
}

StratifiedSubdivision subdivide(const StratifiedSpace& s) {
  StratifiedSubdivision out;
  out.map = barycentric_subdivision(s.complex());
  std::vector<SimplicialComplex> filt;
  const int n = s.dimension();
  for (int d = 0; d < n; ++d) filt.push_back(d > 0 && s.skeleton(d) == s.skeleton(d - 1) ? filt.back() : out.map.carry(s.skeleton(d)));
  filt.push_back(out.map.complex);
  out.space = StratifiedSpace(out.map.complex, std::move(filt));
  return out;
}

StratifiedSpace product_with_manifold(const StratifiedSpace& s, const SimplicialComplex& m) {
  const int n = s.dimension(), k = m.dimension();
  auto whole = product(s.complex(), m);
  std::vector<SimplicialComplex> filt(n + k + 1);
  for (int e = 0; e < n + k; ++e) {
    const int d = e - k;
    if (d < 0 || s.skeleton(d).empty()) continue;
    filt[e] = (d > 0 && s.skeleton(d) == s.skeleton(d - 1)) ? filt[e - 1] : product_of_subcomplex(s.complex(), s.skeleton(d), m);
  }
  filt[n + k] = whole;
  return StratifiedSpace(std::move(whole), std::move(filt));
}

}  // namespace witt
