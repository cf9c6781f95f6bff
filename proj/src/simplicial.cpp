#include "witt/simplicial.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <sstream>
#include <unordered_map>

#include "witt/errors.hpp"

namespace witt {

// ---------------------------------------------------------------- Simplex

Simplex::Simplex(std::initializer_list<Vertex> vs) : Simplex(std::vector<Vertex>(vs)) {}

Simplex::Simplex(std::vector<Vertex> vs) : vertices_(std::move(vs)) {
  std::sort(vertices_.begin(), vertices_.end());
  if (std::adjacent_find(vertices_.begin(), vertices_.end()) != vertices_.end())
    throw ValidationError("simplex repeats a vertex");
  if (!vertices_.empty() && vertices_.front() < 0) throw ValidationError("negative vertex id");
}

bool Simplex::contains(Vertex v) const { return std::binary_search(vertices_.begin(), vertices_.end(), v); }

bool Simplex::is_face_of(const Simplex& other) const {
  return std::includes(other.vertices_.begin(), other.vertices_.end(), vertices_.begin(), vertices_.end());
}

std::string Simplex::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < vertices_.size(); ++i) os << (i ? " " : "") << vertices_[i];
  return os.str();
}

// ------------------------------------------------------ SimplicialComplex

namespace {

bool lex_less(std::span<const Vertex> a, std::span<const Vertex> b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

// Sorted, deduplicated flat table of all faces of dimension d.
std::vector<Vertex> enumerate_faces(const std::vector<Simplex>& facets, int d) {
  const std::size_t k = static_cast<std::size_t>(d) + 1;
  std::vector<Vertex> raw;
  std::vector<Vertex> buf(k);
  for (const auto& f : facets) {
    const std::size_t m = f.size();
    if (m < k) continue;
    // iterate k-subsets of positions in lexicographic order
    std::vector<std::size_t> pos(k);
    std::iota(pos.begin(), pos.end(), 0);
    while (true) {
      for (std::size_t i = 0; i < k; ++i) raw.push_back(f[pos[i]]);
      std::size_t i = k;
      while (i > 0 && pos[i - 1] == m - k + (i - 1)) --i;
      if (i == 0) break;
      ++pos[i - 1];
      for (std::size_t j = i; j < k; ++j) pos[j] = pos[j - 1] + 1;
    }
  }
  const std::size_t n = raw.size() / k;
  std::vector<std::uint32_t> order(n);
  std::iota(order.begin(), order.end(), 0u);
  auto rec = [&](std::uint32_t i) { return std::span<const Vertex>(raw.data() + i * k, k); };
  std::sort(order.begin(), order.end(), [&](auto a, auto b) { return lex_less(rec(a), rec(b)); });
  std::vector<Vertex> out;
  out.reserve(raw.size());
  for (std::size_t i = 0; i < n; ++i) {
    auto r = rec(order[i]);
    if (i > 0 && std::equal(r.begin(), r.end(), rec(order[i - 1]).begin())) continue;
    out.insert(out.end(), r.begin(), r.end());
  }
  return out;
}

}  // namespace

SimplicialComplex::SimplicialComplex() : faces_(std::make_shared<FaceTable>()) {}

SimplicialComplex::SimplicialComplex(std::vector<Simplex> facets) {
  facets.erase(std::remove_if(facets.begin(), facets.end(), [](const Simplex& s) { return s.empty(); }),
               facets.end());
  std::sort(facets.begin(), facets.end());
  facets.erase(std::unique(facets.begin(), facets.end()), facets.end());
  auto table = std::make_shared<FaceTable>();
  int dim = -1;
  for (const auto& f : facets) dim = std::max(dim, f.dimension());
  for (int d = 0; d <= dim; ++d) table->flat.push_back(enumerate_faces(facets, d));
  faces_ = table;
  dimension_ = dim;

  bool uniform = std::all_of(facets.begin(), facets.end(), [&](const Simplex& s) { return s.dimension() == dim; });
  if (!uniform) {
    // drop inputs that are faces of (d+1)-simplices
    std::vector<std::vector<char>> covered(dim + 1);
    for (int d = 0; d <= dim; ++d) covered[d].assign(count(d), 0);
    std::vector<Vertex> sub;
    for (int d = 1; d <= dim; ++d) {
      for (std::size_t i = 0; i < count(d); ++i) {
        auto s = face(d, i);
        for (std::size_t skip = 0; skip < s.size(); ++skip) {
          sub.clear();
          for (std::size_t j = 0; j < s.size(); ++j)
            if (j != skip) sub.push_back(s[j]);
          covered[d - 1][*index_of(sub)] = 1;
        }
      }
    }
    std::vector<Simplex> kept;
    for (auto& f : facets)
      if (!covered[f.dimension()][*index_of(f.span())]) kept.push_back(std::move(f));
    facets = std::move(kept);
  }
  facets_ = std::move(facets);
}

std::size_t SimplicialComplex::count(int d) const {
  if (d < 0 || d > dimension_) return 0;
  return faces_->flat[d].size() / (d + 1);
}

std::span<const Vertex> SimplicialComplex::face(int d, std::size_t index) const {
  const std::size_t k = static_cast<std::size_t>(d) + 1;
  return {faces_->flat[d].data() + index * k, k};
}

std::optional<std::size_t> SimplicialComplex::index_of(std::span<const Vertex> s) const {
  const int d = static_cast<int>(s.size()) - 1;
  if (d < 0 || d > dimension_) return std::nullopt;
  std::size_t lo = 0, hi = count(d);
  while (lo < hi) {
    std::size_t mid = (lo + hi) / 2;
    if (lex_less(face(d, mid), s))
      lo = mid + 1;
    else
      hi = mid;
  }
  if (lo < count(d)) {
    auto f = face(d, lo);
    if (std::equal(f.begin(), f.end(), s.begin())) return lo;
  }
  return std::nullopt;
}

std::vector<Vertex> SimplicialComplex::vertices() const {
  if (dimension_ < 0) return {};
  return faces_->flat[0];
}

Vertex SimplicialComplex::max_vertex() const { return dimension_ < 0 ? -1 : faces_->flat[0].back(); }

std::vector<std::size_t> SimplicialComplex::f_vector() const {
  std::vector<std::size_t> f;
  for (int d = 0; d <= dimension_; ++d) f.push_back(count(d));
  return f;
}

long SimplicialComplex::euler_characteristic() const {
  long chi = 0;
  for (int d = 0; d <= dimension_; ++d) chi += (d % 2 ? -1L : 1L) * static_cast<long>(count(d));
  return chi;
}

bool SimplicialComplex::is_pure() const {
  return std::all_of(facets_.begin(), facets_.end(), [&](const Simplex& s) { return s.dimension() == dimension_; });
}

bool SimplicialComplex::has_subcomplex(const SimplicialComplex& sub) const {
  return std::all_of(sub.facets().begin(), sub.facets().end(), [&](const Simplex& s) { return contains(s); });
}

SimplicialComplex build_complex(const std::vector<std::vector<Vertex>>& facets) {
  if (facets.empty()) throw ValidationError("empty facet list");
  std::vector<Simplex> s;
  s.reserve(facets.size());
  for (const auto& f : facets) {
    if (f.empty()) throw ValidationError("empty facet");
    s.emplace_back(f);
  }
  return SimplicialComplex(std::move(s));
}

// ------------------------------------------------------------ local ops

SimplicialComplex link(const SimplicialComplex& x, const Simplex& s) {
  if (!x.contains(s)) throw ValidationError("simplex " + s.to_string() + " is not in the complex");
  std::vector<Simplex> out;
  for (const auto& f : x.facets()) {
    if (!s.is_face_of(f)) continue;
    std::vector<Vertex> rest;
    std::set_difference(f.begin(), f.end(), s.begin(), s.end(), std::back_inserter(rest));
    if (!rest.empty()) out.emplace_back(std::move(rest));
  }
  return SimplicialComplex(std::move(out));
}

SimplicialComplex closed_star(const SimplicialComplex& x, const Simplex& s) {
  if (!x.contains(s)) throw ValidationError("simplex " + s.to_string() + " is not in the complex");
  std::vector<Simplex> out;
  for (const auto& f : x.facets())
    if (s.is_face_of(f)) out.push_back(f);
  return SimplicialComplex(std::move(out));
}

SimplicialComplex union_of(const SimplicialComplex& a, const SimplicialComplex& b) {
  auto f = a.facets();
  f.insert(f.end(), b.facets().begin(), b.facets().end());
  return SimplicialComplex(std::move(f));
}

SimplicialComplex intersection_of(const SimplicialComplex& a, const SimplicialComplex& b) {
  std::vector<Simplex> out;
  for (int d = 0; d <= a.dimension(); ++d)
    for (std::size_t i = 0; i < a.count(d); ++i)
      if (b.contains(a.face(d, i))) out.emplace_back(a.face(d, i));
  return SimplicialComplex(std::move(out));
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

std::vector<SimplicialComplex> connected_components(const SimplicialComplex& x) {
  auto verts = x.vertices();
  auto pos = [&](Vertex v) { return static_cast<std::size_t>(std::lower_bound(verts.begin(), verts.end(), v) - verts.begin()); };
  UnionFind uf(verts.size());
  for (const auto& f : x.facets())
    for (Vertex v : f) uf.unite(pos(f[0]), pos(v));
  std::vector<std::vector<Simplex>> groups;
  std::unordered_map<std::size_t, std::size_t> slot;
  for (const auto& f : x.facets()) {
    auto root = uf.find(pos(f[0]));
    auto [it, fresh] = slot.emplace(root, groups.size());
    if (fresh) groups.emplace_back();
    groups[it->second].push_back(f);
  }
  std::vector<SimplicialComplex> out;
  for (auto& g : groups) out.emplace_back(std::move(g));
  return out;
}

namespace {

// Number of facets containing each codimension-one face.
std::vector<int> ridge_counts(const SimplicialComplex& x) {
  const int n = x.dimension();
  std::vector<int> counts(x.count(n - 1), 0);
  std::vector<Vertex> sub;
  for (const auto& f : x.facets()) {
    if (f.dimension() != n) continue;
    for (std::size_t skip = 0; skip < f.size(); ++skip) {
      sub.clear();
      for (std::size_t j = 0; j < f.size(); ++j)
        if (j != skip) sub.push_back(f[j]);
      ++counts[*x.index_of(sub)];
    }
  }
  return counts;
}

}  // namespace

PseudomanifoldVerdict is_pseudomanifold(const SimplicialComplex& x, bool closed) {
  if (x.empty()) return {false, std::nullopt, "empty complex"};
  const int n = x.dimension();
  for (const auto& f : x.facets())
    if (f.dimension() != n) return {false, f, "impure: maximal simplex of dimension " + std::to_string(f.dimension())};
  if (n == 0) return {true, std::nullopt, ""};
  auto counts = ridge_counts(x);
  for (std::size_t i = 0; i < counts.size(); ++i) {
    const int c = counts[i];
    const bool good = closed ? c == 2 : (c == 1 || c == 2);
    if (!good)
      return {false, x.simplex(n - 1, i),
              "codimension-one face lies in " + std::to_string(c) + " facets"};
  }
  return {true, std::nullopt, ""};
}

SimplicialComplex boundary_subcomplex(const SimplicialComplex& x) {
  auto verdict = is_pseudomanifold(x, false);
  if (!verdict.ok) throw ValidationError("not a pseudomanifold with boundary: " + verdict.reason);
  const int n = x.dimension();
  if (n == 0) return SimplicialComplex();
  auto counts = ridge_counts(x);
  std::vector<Simplex> out;
  for (std::size_t i = 0; i < counts.size(); ++i)
    if (counts[i] == 1) out.push_back(x.simplex(n - 1, i));
  return SimplicialComplex(std::move(out));
}

OrientationResult orient(const SimplicialComplex& x) {
  const int n = x.dimension();
  const auto& facets = x.facets();
  if (!x.is_pure()) throw ValidationError("orient: complex is not pure");
  OrientationResult result;
  if (n <= 0) {
    result.orientation = Orientation{std::vector<int>(facets.size(), 1)};
    return result;
  }
  // ridge -> (facet, omitted position) incidences
  std::vector<std::vector<std::pair<std::size_t, int>>> ridges(x.count(n - 1));
  std::vector<Vertex> sub;
  for (std::size_t fi = 0; fi < facets.size(); ++fi) {
    const auto& f = facets[fi];
    for (std::size_t skip = 0; skip < f.size(); ++skip) {
      sub.clear();
      for (std::size_t j = 0; j < f.size(); ++j)
        if (j != skip) sub.push_back(f[j]);
      auto& r = ridges[*x.index_of(sub)];
      r.emplace_back(fi, static_cast<int>(skip));
      if (r.size() > 2) throw ValidationError("orient: face " + Simplex(sub).to_string() + " lies in more than two facets");
    }
  }
  std::vector<std::vector<std::pair<std::size_t, int>>> adj(facets.size());  // neighbor, parity
  for (const auto& r : ridges) {
    if (r.size() != 2) continue;
    const int parity = (r[0].second + r[1].second) % 2;
    adj[r[0].first].emplace_back(r[1].first, parity);
    adj[r[1].first].emplace_back(r[0].first, parity);
  }
  std::vector<int> sign(facets.size(), 0);
  std::vector<std::size_t> parent(facets.size()), depth(facets.size(), 0);
  for (std::size_t root = 0; root < facets.size(); ++root) {
    if (sign[root]) continue;
    sign[root] = 1;
    parent[root] = root;
    std::queue<std::size_t> q;
    q.push(root);
    while (!q.empty()) {
      auto f = q.front();
      q.pop();
      for (auto [g, parity] : adj[f]) {
        const int want = -sign[f] * (parity ? -1 : 1);
        if (!sign[g]) {
          sign[g] = want;
          parent[g] = f;
          depth[g] = depth[f] + 1;
          q.push(g);
        } else if (sign[g] != want) {
          // walk both tree paths up to the common ancestor
          std::vector<std::size_t> a{f}, b{g};
          while (a.back() != b.back()) {
            if (depth[a.back()] >= depth[b.back()])
              a.push_back(parent[a.back()]);
            else
              b.push_back(parent[b.back()]);
          }
          b.pop_back();
          a.insert(a.end(), b.rbegin(), b.rend());
          result.odd_cycle = std::move(a);
          return result;
        }
      }
    }
  }
  result.orientation = Orientation{std::move(sign)};
  return result;
}

std::vector<std::pair<Simplex, int>> induced_boundary_orientation(const SimplicialComplex& x, const Orientation& o) {
  const int n = x.dimension();
  std::vector<std::pair<Simplex, int>> out;
  if (n <= 0) return out;
  auto counts = ridge_counts(x);
  std::vector<Vertex> sub;
  for (std::size_t fi = 0; fi < x.facets().size(); ++fi) {
    const auto& f = x.facets()[fi];
    for (std::size_t skip = 0; skip < f.size(); ++skip) {
      sub.clear();
      for (std::size_t j = 0; j < f.size(); ++j)
        if (j != skip) sub.push_back(f[j]);
      if (counts[*x.index_of(sub)] == 1) out.emplace_back(Simplex(sub), o.signs[fi] * (skip % 2 ? -1 : 1));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// --------------------------------------------------------- constructors

Relabeling relabel_dense(const SimplicialComplex& x) {
  auto verts = x.vertices();
  std::vector<Simplex> out;
  out.reserve(x.facets().size());
  for (const auto& f : x.facets()) {
    std::vector<Vertex> g;
    for (Vertex v : f)
      g.push_back(static_cast<Vertex>(std::lower_bound(verts.begin(), verts.end(), v) - verts.begin()));
    out.emplace_back(std::move(g));
  }
  return {SimplicialComplex(std::move(out)), std::move(verts)};
}

SimplicialComplex map_vertices(const SimplicialComplex& x, const std::vector<std::pair<Vertex, Vertex>>& mapping) {
  std::unordered_map<Vertex, Vertex> m(mapping.begin(), mapping.end());
  std::vector<Simplex> out;
  for (const auto& f : x.facets()) {
    std::vector<Vertex> g;
    for (Vertex v : f) {
      auto it = m.find(v);
      if (it == m.end()) throw ValidationError("vertex map misses vertex " + std::to_string(v));
      g.push_back(it->second);
    }
    out.emplace_back(std::move(g));
  }
  return SimplicialComplex(std::move(out));
}

SimplicialComplex cone(const SimplicialComplex& x) {
  auto base = relabel_dense(x).complex;
  const Vertex apex = static_cast<Vertex>(x.count(0));
  if (base.empty()) return SimplicialComplex({Simplex{0}});
  std::vector<Simplex> out;
  for (const auto& f : base.facets()) {
    auto v = f.vertices();
    v.push_back(apex);
    out.emplace_back(std::move(v));
  }
  return SimplicialComplex(std::move(out));
}

SimplicialComplex suspension(const SimplicialComplex& x) {
  auto base = relabel_dense(x).complex;
  const Vertex north = static_cast<Vertex>(x.count(0));
  if (base.empty()) return SimplicialComplex({Simplex{0}, Simplex{1}});
  std::vector<Simplex> out;
  for (const auto& f : base.facets())
    for (Vertex apex : {north, north + 1}) {
      auto v = f.vertices();
      v.push_back(apex);
      out.emplace_back(std::move(v));
    }
  return SimplicialComplex(std::move(out));
}

SimplicialComplex disjoint_union(const SimplicialComplex& x, const SimplicialComplex& y) {
  auto a = relabel_dense(x).complex;
  auto b = relabel_dense(y).complex;
  const Vertex shift = static_cast<Vertex>(a.count(0));
  auto out = a.facets();
  for (const auto& f : b.facets()) {
    std::vector<Vertex> v;
    for (Vertex u : f) v.push_back(u + shift);
    out.emplace_back(std::move(v));
  }
  return SimplicialComplex(std::move(out));
}

SimplicialComplex glue_at_points(const SimplicialComplex& x, const std::vector<std::vector<Vertex>>& classes) {
  std::unordered_map<Vertex, Vertex> rep;
  for (const auto& cls : classes) {
    if (cls.empty()) continue;
    const Vertex target = *std::min_element(cls.begin(), cls.end());
    for (Vertex v : cls) {
      if (!x.contains(std::span<const Vertex>(&v, 1)))
        throw ValidationError("glue: vertex " + std::to_string(v) + " is not in the complex");
      if (!rep.emplace(v, target).second) throw ValidationError("glue: vertex " + std::to_string(v) + " listed twice");
    }
  }
  auto image = [&](Vertex v) {
    auto it = rep.find(v);
    return it == rep.end() ? v : it->second;
  };
  std::vector<Simplex> out;
  for (const auto& f : x.facets()) {
    std::vector<Vertex> g;
    for (Vertex v : f) g.push_back(image(v));
    std::sort(g.begin(), g.end());
    if (std::adjacent_find(g.begin(), g.end()) != g.end())
      throw ValidationError("glue: identified vertices share the simplex " + f.to_string());
    out.emplace_back(std::move(g));
  }
  SimplicialComplex glued(std::move(out));
  std::size_t merged_points = rep.size();
  for (const auto& cls : classes)
    if (!cls.empty()) --merged_points;
  for (int d = 0; d <= x.dimension(); ++d) {
    const std::size_t expect = x.count(d) - (d == 0 ? merged_points : 0);
    if (glued.count(d) != expect)
      throw ValidationError("glue: identification merges " + std::to_string(d) +
                            "-simplices (vertices have common neighbours; subdivide first)");
  }
  return relabel_dense(glued).complex;
}

SimplicialComplex wedge(const SimplicialComplex& x, Vertex at_x, const SimplicialComplex& y, Vertex at_y) {
  auto vx = x.vertices();
  auto vy = y.vertices();
  auto px = std::lower_bound(vx.begin(), vx.end(), at_x);
  auto py = std::lower_bound(vy.begin(), vy.end(), at_y);
  if (px == vx.end() || *px != at_x || py == vy.end() || *py != at_y)
    throw ValidationError("wedge: base point is not a vertex");
  const Vertex a = static_cast<Vertex>(px - vx.begin());
  const Vertex b = static_cast<Vertex>(py - vy.begin()) + static_cast<Vertex>(vx.size());
  return glue_at_points(disjoint_union(x, y), {{a, b}});
}

namespace {

void staircase(std::span<const Vertex> xs, std::span<const Vertex> ys, Vertex ny, std::vector<Simplex>& out) {
  const std::size_t p = xs.size() - 1, q = ys.size() - 1;
  // choose which of the p+q steps move in x
  std::vector<char> step(p + q, 0);
  std::fill(step.begin(), step.begin() + static_cast<long>(p), 1);
  std::sort(step.begin(), step.end());
  do {
    std::vector<Vertex> s;
    std::size_t i = 0, j = 0;
    s.push_back(xs[0] * ny + ys[0]);
    for (char c : step) {
      if (c)
        ++i;
      else
        ++j;
      s.push_back(xs[i] * ny + ys[j]);
    }
    out.emplace_back(std::move(s));
  } while (std::next_permutation(step.begin(), step.end()));
}

std::vector<Vertex> ranks(const std::vector<Vertex>& verts, const Simplex& s) {
  std::vector<Vertex> r;
  for (Vertex v : s) r.push_back(static_cast<Vertex>(std::lower_bound(verts.begin(), verts.end(), v) - verts.begin()));
  return r;
}

}  // namespace

SimplicialComplex product_of_subcomplex(const SimplicialComplex& x, const SimplicialComplex& a,
                                        const SimplicialComplex& y) {
  auto vx = x.vertices();
  auto vy = y.vertices();
  const Vertex ny = static_cast<Vertex>(vy.size());
  std::vector<Simplex> out;
  for (const auto& fx : a.facets()) {
    auto rx = ranks(vx, fx);
    for (const auto& fy : y.facets()) staircase(rx, ranks(vy, fy), ny, out);
  }
  return SimplicialComplex(std::move(out));
}

SimplicialComplex product(const SimplicialComplex& x, const SimplicialComplex& y) {
  return product_of_subcomplex(x, x, y);
}

Subdivision barycentric_subdivision(const SimplicialComplex& x) {
  Subdivision sd;
  std::vector<std::size_t> offset;
  for (int d = 0; d <= x.dimension(); ++d) {
    offset.push_back(sd.origin.size());
    for (std::size_t i = 0; i < x.count(d); ++i) sd.origin.push_back(x.simplex(d, i));
  }
  std::vector<Simplex> flags;
  std::vector<Vertex> prefix;
  for (const auto& f : x.facets()) {
    std::vector<Vertex> perm = f.vertices();
    do {
      std::vector<Vertex> chain;
      prefix.clear();
      for (Vertex v : perm) {
        prefix.push_back(v);
        std::vector<Vertex> sorted = prefix;
        std::sort(sorted.begin(), sorted.end());
        const int d = static_cast<int>(sorted.size()) - 1;
        chain.push_back(static_cast<Vertex>(offset[d] + *x.index_of(sorted)));
      }
      flags.emplace_back(std::move(chain));
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  sd.complex = SimplicialComplex(std::move(flags));
  return sd;
}

std::optional<Vertex> Subdivision::vertex_of(const Simplex& s) const {
  auto it = std::lower_bound(origin.begin(), origin.end(), s, [](const Simplex& a, const Simplex& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  if (it == origin.end() || *it != s) return std::nullopt;
  return static_cast<Vertex>(it - origin.begin());
}

SimplicialComplex Subdivision::carry(const SimplicialComplex& sub) const {
  return full_subcomplex(complex, [&](Vertex v) { return sub.contains(origin[v]); });
}

}  // namespace witt
