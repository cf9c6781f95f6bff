#include "witt/constructions.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <regex>
#include <set>

#include "witt/errors.hpp"
#include "witt/homology.hpp"

namespace witt {

namespace {

// 9-vertex CP^2, invariant under translation by Z3 x Z3 on {0..8}.
const std::vector<std::vector<Vertex>> kCp2 = {
    {0, 1, 2, 3, 4}, {0, 1, 2, 3, 5}, {0, 1, 2, 4, 5}, {0, 1, 3, 4, 6}, {0, 1, 3, 5, 7}, {0, 1, 3, 6, 7},
    {0, 1, 4, 5, 6}, {0, 1, 5, 6, 8}, {0, 1, 5, 7, 8}, {0, 1, 6, 7, 8}, {0, 2, 3, 4, 8}, {0, 2, 3, 5, 8},
    {0, 2, 4, 5, 6}, {0, 2, 4, 6, 7}, {0, 2, 4, 7, 8}, {0, 2, 5, 6, 8}, {0, 2, 6, 7, 8}, {0, 3, 4, 6, 7},
    {0, 3, 4, 7, 8}, {0, 3, 5, 7, 8}, {1, 2, 3, 4, 8}, {1, 2, 3, 5, 7}, {1, 2, 3, 6, 7}, {1, 2, 3, 6, 8},
    {1, 2, 4, 5, 7}, {1, 2, 4, 7, 8}, {1, 2, 6, 7, 8}, {1, 3, 4, 6, 8}, {1, 4, 5, 6, 8}, {1, 4, 5, 7, 8},
    {2, 3, 5, 6, 7}, {2, 3, 5, 6, 8}, {2, 4, 5, 6, 7}, {3, 4, 5, 6, 7}, {3, 4, 5, 6, 8}, {3, 4, 5, 7, 8},
};

// 6-vertex RP^2 (antipodal quotient of the icosahedron).
const std::vector<std::vector<Vertex>> kRp2 = {
    {0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 5}, {0, 1, 5}, {1, 2, 4}, {2, 3, 5}, {1, 3, 4}, {2, 4, 5}, {1, 3, 5},
};

SimplicialComplex sphere(int n) {
  std::vector<Simplex> facets;
  for (int skip = 0; skip <= n + 1; ++skip) {
    std::vector<Vertex> f;
    for (int v = 0; v <= n + 1; ++v)
      if (v != skip) f.push_back(v);
    facets.emplace_back(std::move(f));
  }
  return SimplicialComplex(std::move(facets));
}

SimplicialComplex torus7() {
  std::vector<std::vector<Vertex>> t;
  for (int i = 0; i < 7; ++i) {
    t.push_back({i, (i + 1) % 7, (i + 3) % 7});
    t.push_back({i, (i + 2) % 7, (i + 3) % 7});
  }
  return build_complex(t);
}

SimplicialComplex klein9() {
  // 3x3 grid; crossing i = 3 returns to i = 0 with j reflected
  auto point = [](int i, int j) {
    j = ((j % 3) + 3) % 3;
    if (i == 3) return static_cast<Vertex>((3 - j) % 3);
    return static_cast<Vertex>(i * 3 + j);
  };
  std::vector<std::vector<Vertex>> t;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      t.push_back({point(i, j), point(i + 1, j), point(i + 1, j + 1)});
      t.push_back({point(i, j), point(i + 1, j + 1), point(i, j + 1)});
    }
  return build_complex(t);
}

long binomial(long n, long k) {
  long b = 1;
  for (long i = 1; i <= k; ++i) b = b * (n - k + i) / i;
  return b;
}

CatalogueEntry make_entry(const std::string& name) {
  static const std::regex with_arg(R"(([a-z]+)\((\d+)\))");
  std::smatch m;
  CatalogueEntry e;
  e.name = name;
  auto sphere_homology = [&](int n) {
    e.betti.assign(n + 1, 0);
    e.betti[0] += 1;
    e.betti[n] += 1;
    e.torsion.assign(n + 1, {});
  };
  if (std::regex_match(name, m, with_arg)) {
    const std::string head = m[1];
    const int arg = std::stoi(m[2]);
    if (head == "sphere") {
      if (arg < 0 || arg > 6) throw ValidationError("sphere(n) is catalogued for n ≤ 6");
      e.complex = sphere(arg);
      for (int k = 0; k <= arg; ++k) e.f_vector.push_back(static_cast<std::size_t>(binomial(arg + 2, k + 1)));
      sphere_homology(arg);
      if (arg == 0) e.betti = {2};
      return e;
    }
    if (head == "genus") {
      if (arg < 0 || arg > 3) throw ValidationError("genus(g) is catalogued for g ≤ 3");
      if (arg == 0) {
        e.complex = sphere(2);
        e.f_vector = {4, 6, 4};
      } else {
        e.complex = torus7();
        for (int g = 2; g <= arg; ++g) e.complex = connected_sum(e.complex, torus7());
        const std::size_t v = 7 + 4 * (arg - 1), f = 14 + 12 * (arg - 1);
        e.f_vector = {v, v + f - 2 + 2 * arg, f};
      }
      e.betti = {1, 2L * arg, 1};
      e.torsion.assign(3, {});
      return e;
    }
    throw ValidationError("unknown catalogue space '" + name + "'");
  }
  if (name == "s1") {
    e.complex = sphere(1);
    e.f_vector = {3, 3};
    sphere_homology(1);
  } else if (name == "rp2") {
    e.complex = build_complex(kRp2);
    e.f_vector = {6, 15, 10};
    e.betti = {1, 0, 0};
    e.torsion = {{}, {2}, {}};
  } else if (name == "rp3") {
    e.complex = antipodal_projective_space(3);
    e.f_vector = {15, 75, 120, 60};
    e.betti = {1, 0, 0, 1};
    e.torsion = {{}, {2}, {}, {}};
  } else if (name == "torus") {
    e.complex = torus7();
    e.f_vector = {7, 21, 14};
    e.betti = {1, 2, 1};
    e.torsion.assign(3, {});
  } else if (name == "klein") {
    e.complex = klein9();
    e.f_vector = {9, 27, 18};
    e.betti = {1, 1, 0};
    e.torsion = {{}, {2}, {}};
  } else if (name == "cp2") {
    e.complex = build_complex(kCp2);
    e.f_vector = {9, 36, 84, 90, 36};
    e.betti = {1, 0, 1, 0, 1};
    e.torsion.assign(5, {});
  } else {
    throw ValidationError("unknown catalogue space '" + name + "'");
  }
  return e;
}

void verify_entry(const CatalogueEntry& e) {
  if (e.complex.f_vector() != e.f_vector) throw std::logic_error("catalogue entry " + e.name + ": f-vector mismatch");
  auto h = homology(e.complex, CoefficientSpec::integers());
  if (h.betti != e.betti || h.torsion != e.torsion) throw std::logic_error("catalogue entry " + e.name + ": homology mismatch");
  if (!is_pseudomanifold(e.complex, true).ok) throw std::logic_error("catalogue entry " + e.name + ": not a closed pseudomanifold");
}

}  // namespace

SimplicialComplex connected_sum(const SimplicialComplex& a, const SimplicialComplex& b) {
  auto x = relabel_dense(a).complex;
  auto y = relabel_dense(b).complex;
  if (x.dimension() != 2 || y.dimension() != 2) throw ValidationError("connected sum is implemented for surfaces");
  const Vertex shift = static_cast<Vertex>(x.count(0));
  const auto& ta = x.facets().front();
  const auto& tb = y.facets().front();
  std::vector<Simplex> out(x.facets().begin() + 1, x.facets().end());
  for (std::size_t i = 1; i < y.facets().size(); ++i) {
    std::vector<Vertex> g;
    for (Vertex v : y.facets()[i]) {
      auto pos = std::find(tb.begin(), tb.end(), v);
      g.push_back(pos != tb.end() ? ta[pos - tb.begin()] : v + shift);
    }
    out.emplace_back(std::move(g));
  }
  auto sum = relabel_dense(SimplicialComplex(std::move(out))).complex;
  if (!is_pseudomanifold(sum, true).ok) throw ValidationError("connected sum is not a closed surface");
  return sum;
}

SimplicialComplex antipodal_projective_space(int n) {
  if (n < 1 || n > 6) throw ValidationError("projective space dimension out of range");
  const int m = n + 2;
  const unsigned full = (1u << m) - 1;
  std::map<unsigned, Vertex> id;
  for (unsigned s = 1; s < full; ++s) {
    const unsigned rep = std::min(s, full ^ s);
    id.emplace(rep, 0);
  }
  Vertex next = 0;
  for (auto& [rep, v] : id) v = next++;
  std::vector<int> perm(m);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<Simplex> facets;
  do {
    std::vector<Vertex> f;
    unsigned s = 0;
    for (int k = 0; k <= n; ++k) {
      s |= 1u << perm[k];
      f.push_back(id.at(std::min(s, full ^ s)));
    }
    std::sort(f.begin(), f.end());
    facets.emplace_back(std::move(f));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return SimplicialComplex(std::move(facets));
}

CatalogueEntry catalogue_entry(const std::string& name) {
  static std::mutex lock;
  static std::map<std::string, CatalogueEntry> cache;
  std::lock_guard<std::mutex> guard(lock);
  if (auto it = cache.find(name); it != cache.end()) return it->second;
  auto e = make_entry(name);
  verify_entry(e);
  return cache.emplace(name, std::move(e)).first->second;
}

SimplicialComplex standard_space(const std::string& name) { return catalogue_entry(name).complex; }

std::vector<std::string> catalogue_names() {
  std::vector<std::string> names;
  for (int n = 0; n <= 6; ++n) names.push_back("sphere(" + std::to_string(n) + ")");
  for (const char* s : {"s1", "rp2", "rp3", "torus", "klein"}) names.push_back(s);
  for (int g = 0; g <= 3; ++g) names.push_back("genus(" + std::to_string(g) + ")");
  names.push_back("cp2");
  return names;
}

// ---------------------------------------------------------------- bordisms

namespace {

std::map<int, SimplicialComplex> filtration_map(const StratifiedSpace& s) {
  std::map<int, SimplicialComplex> m;
  for (int d = 0; d < s.dimension(); ++d) m[d] = s.skeleton(d);
  return m;
}

// cone of a stratified space: (c̄X)_0 = apex, (c̄X)_{d+1} = c̄(X_d)
StratifiedSpace cone_stratified(const StratifiedSpace& x, const SimplicialComplex& w, Vertex apex,
                                const std::vector<Vertex>& old_of_new) {
  const int n = x.dimension();
  std::map<Vertex, Vertex> new_of_old;
  for (std::size_t i = 0; i < old_of_new.size(); ++i) new_of_old[old_of_new[i]] = static_cast<Vertex>(i);
  std::map<int, SimplicialComplex> decl;
  decl[0] = SimplicialComplex({Simplex{apex}});
  for (int d = 0; d < n; ++d) {
    const auto& xd = x.skeleton(d);
    std::vector<Simplex> f{Simplex{apex}};
    for (const auto& s : xd.facets()) {
      std::vector<Vertex> g;
      for (Vertex v : s) g.push_back(new_of_old.at(v));
      g.push_back(apex);
      f.emplace_back(std::move(g));
    }
    decl[d + 1] = SimplicialComplex(std::move(f));
  }
  return stratify(w, decl);
}

}  // namespace

BordismCertificate closed_cone_nullbordism(const SimplicialComplex& x, bool force) {
  auto pm = is_pseudomanifold(x, true);
  if (!pm.ok) throw ValidationError("cone null-bordism: not a closed pseudomanifold: " + pm.reason);
  if (x.dimension() % 2 == 0 && !force)
    throw ValidationError("cone null-bordism: X has even dimension " + std::to_string(x.dimension()) +
                          "; the apex would carry a Witt condition");
  auto strat = candidate_stratification(x).space;
  if (!force) {
    auto v = is_witt_space(strat, CoefficientSpec::f2(), OrientationMode::Z2);
    if (!v.witt) throw ValidationError("cone null-bordism: X is not an F2-Witt space");
  }
  auto rl = relabel_dense(x);
  const Vertex apex = static_cast<Vertex>(x.count(0));
  auto w = cone(x);
  BordismCertificate cert;
  cert.w = cone_stratified(strat, w, apex, rl.old_of_new);
  BoundaryPiece piece;
  piece.name = "X";
  piece.declared = x;
  for (std::size_t i = 0; i < rl.old_of_new.size(); ++i) piece.map.emplace_back(rl.old_of_new[i], static_cast<Vertex>(i));
  cert.pieces.push_back(std::move(piece));
  return cert;
}

BordismCertificate cylinder_bordism(const SimplicialComplex& x) {
  auto rl = relabel_dense(x);
  auto strat = candidate_stratification(rl.complex).space;
  auto interval = SimplicialComplex({Simplex{0, 1}});
  BordismCertificate cert;
  cert.w = product_with_manifold(strat, interval);
  for (int t = 0; t < 2; ++t) {
    BoundaryPiece piece;
    piece.name = t == 0 ? "X x 0" : "X x 1";
    piece.declared = x;
    for (std::size_t i = 0; i < rl.old_of_new.size(); ++i)
      piece.map.emplace_back(rl.old_of_new[i], static_cast<Vertex>(2 * i + t));
    cert.pieces.push_back(std::move(piece));
  }
  return cert;
}

BordismCertificate pinch_bordism_2d(const std::vector<SimplicialComplex>& surfaces,
                                    const std::vector<std::vector<SurfacePoint>>& classes) {
  if (surfaces.empty()) throw ValidationError("pinch: no surfaces");
  // twice subdivided disjoint union: closed stars of distinct original vertices are then disjoint
  std::vector<Simplex> facets;
  std::vector<Vertex> shift;
  std::vector<Subdivision> first, sds;
  Vertex total = 0;
  for (const auto& s : surfaces) {
    auto pm = is_pseudomanifold(s, true);
    if (!pm.ok || s.dimension() != 2) throw ValidationError("pinch: inputs must be closed surfaces");
    first.push_back(barycentric_subdivision(s));
    sds.push_back(barycentric_subdivision(first.back().complex));
    shift.push_back(total);
    for (const auto& f : sds.back().complex.facets()) {
      std::vector<Vertex> g;
      for (Vertex v : f) g.push_back(v + total);
      facets.emplace_back(std::move(g));
    }
    total += static_cast<Vertex>(sds.back().complex.count(0));
  }
  const SimplicialComplex s(std::move(facets));
  const Vertex n = total;
  std::vector<std::vector<Vertex>> centers;
  std::set<Vertex> used, star_vertices;
  for (const auto& cls : classes) {
    if (cls.size() < 2) throw ValidationError("pinch: a gluing class needs at least two points");
    std::vector<Vertex> c;
    for (auto [i, v] : cls) {
      if (i >= surfaces.size()) throw ValidationError("pinch: surface index out of range");
      auto sv1 = first[i].vertex_of(Simplex({v}));
      auto sv = sv1 ? sds[i].vertex_of(Simplex({*sv1})) : std::nullopt;
      if (!sv) throw ValidationError("pinch: vertex " + std::to_string(v) + " is not in surface " + std::to_string(i));
      const Vertex g = *sv + shift[i];
      if (!used.insert(g).second) throw ValidationError("pinch: point listed twice");
      for (Vertex u : closed_star(s, Simplex({g})).vertices())
        if (!star_vertices.insert(u).second) throw ValidationError("pinch: neighborhoods of gluing points overlap");
      c.push_back(g);
    }
    centers.push_back(std::move(c));
  }
  const Vertex classes_n = static_cast<Vertex>(centers.size());
  auto apex = [&](std::size_t j) { return static_cast<Vertex>(2 * n + static_cast<Vertex>(j)); };
  auto top = [](Vertex a) { return 2 * a + 1; };

  std::vector<Simplex> w = product(s, SimplicialComplex({Simplex{0, 1}})).facets();
  // cones on the closed stars in the top copy, and the outgoing boundary Y
  std::vector<Simplex> y;
  std::map<Vertex, std::size_t> class_of;
  for (std::size_t j = 0; j < centers.size(); ++j)
    for (Vertex c : centers[j]) class_of[c] = j;
  for (const auto& f : s.facets()) {
    std::optional<std::size_t> cls;
    for (Vertex v : f)
      if (auto it = class_of.find(v); it != class_of.end()) cls = it->second;
    std::vector<Vertex> tf;
    for (Vertex v : f) tf.push_back(top(v));
    if (!cls) {
      y.emplace_back(tf);
      continue;
    }
    auto coned = tf;
    coned.push_back(apex(*cls));
    w.emplace_back(coned);
    std::vector<Vertex> outer;
    for (Vertex v : f)
      if (!class_of.count(v)) outer.push_back(top(v));
    outer.push_back(apex(*cls));
    y.emplace_back(std::move(outer));
  }
  const SimplicialComplex ycx(y);
  // collar Y x [1,2]
  const auto yverts = ycx.vertices();
  const Vertex base = 2 * n + classes_n;
  auto upper = [&](Vertex v) {
    return base + static_cast<Vertex>(std::lower_bound(yverts.begin(), yverts.end(), v) - yverts.begin());
  };
  for (const auto& g : ycx.facets()) {
    for (std::size_t k = 0; k < g.size(); ++k) {
      std::vector<Vertex> f;
      for (std::size_t i = 0; i <= k; ++i) f.push_back(g[i]);
      for (std::size_t i = k; i < g.size(); ++i) f.push_back(upper(g[i]));
      w.emplace_back(std::move(f));
    }
  }
  SimplicialComplex wcx(std::move(w));
  std::vector<Simplex> apexes;
  for (std::size_t j = 0; j < centers.size(); ++j) apexes.push_back(Simplex{apex(j)});
  BordismCertificate cert;
  cert.w = stratify(wcx, {{0, SimplicialComplex(apexes)}});
  for (std::size_t j = 0; j < centers.size(); ++j) cert.pinch_points.push_back(apex(j));

  BoundaryPiece incoming;
  incoming.name = "disjoint surfaces";
  incoming.declared = s;
  for (Vertex a = 0; a < n; ++a) incoming.map.emplace_back(a, 2 * a);
  BoundaryPiece outgoing;
  outgoing.name = "glued space";
  outgoing.declared = glue_at_points(s, centers);
  // glue_at_points sends each class to its least member and relabels densely
  std::vector<Vertex> survivors;
  for (Vertex a = 0; a < n; ++a)
    if (!class_of.count(a) || *std::min_element(centers[class_of[a]].begin(), centers[class_of[a]].end()) == a)
      survivors.push_back(a);
  for (std::size_t r = 0; r < survivors.size(); ++r) {
    const Vertex a = survivors[r];
    const Vertex in_y = class_of.count(a) ? apex(class_of[a]) : top(a);
    outgoing.map.emplace_back(static_cast<Vertex>(r), upper(in_y));
  }
  cert.pieces.push_back(std::move(incoming));
  cert.pieces.push_back(std::move(outgoing));
  return cert;
}

BordismReport verify_bordism(const BordismCertificate& cert, const CoefficientSpec& coeffs, OrientationMode mode) {
  BordismReport r;
  const auto& w = cert.w.complex();
  auto add = [&](std::string name, bool pass, std::string detail) {
    r.checks.push_back({std::move(name), pass, std::move(detail)});
  };
  auto pm = is_pseudomanifold(w, false);
  add("pseudomanifold with boundary", pm.ok, pm.ok ? "" : pm.reason + (pm.witness ? " at " + pm.witness->to_string() : ""));
  if (!pm.ok) return r;
  try {
    stratify(w, filtration_map(cert.w));
    add("stratification", true, "");
  } catch (const ValidationError& e) {
    add("stratification", false, e.what());
    return r;
  }
  const auto bnd = w.dimension() >= 1 ? boundary_subcomplex(w) : SimplicialComplex();
  // identifications
  bool ident_ok = true;
  std::string ident_detail;
  std::vector<Simplex> covered;
  std::set<Vertex> seen_vertices;
  std::vector<SimplicialComplex> images;
  for (const auto& piece : cert.pieces) {
    std::map<Vertex, Vertex> f;
    std::set<Vertex> targets;
    for (auto [a, b] : piece.map) {
      if (!f.emplace(a, b).second || !targets.insert(b).second) {
        ident_ok = false;
        ident_detail += piece.name + ": vertex map is not a bijection; ";
      }
    }
    std::vector<std::pair<Vertex, Vertex>> pairs(f.begin(), f.end());
    SimplicialComplex image;
    try {
      image = map_vertices(piece.declared, pairs);
    } catch (const ValidationError& e) {
      ident_ok = false;
      ident_detail += piece.name + ": " + e.what() + "; ";
      continue;
    }
    if (image.f_vector() != piece.declared.f_vector()) {
      ident_ok = false;
      ident_detail += piece.name + ": vertex map is not injective on simplices; ";
    }
    for (const auto& facet : image.facets()) {
      if (!bnd.contains(facet) || facet.dimension() != w.dimension() - 1) {
        ident_ok = false;
        ident_detail += piece.name + ": simplex " + facet.to_string() + " is not a boundary face; ";
        break;
      }
      covered.push_back(facet);
    }
    for (Vertex v : image.vertices())
      if (!seen_vertices.insert(v).second) {
        ident_ok = false;
        ident_detail += piece.name + ": overlaps another piece at vertex " + std::to_string(v) + "; ";
        break;
      }
    images.push_back(std::move(image));
  }
  if (ident_ok && !(SimplicialComplex(covered) == bnd)) {
    ident_ok = false;
    ident_detail += "declared pieces do not exhaust the boundary; ";
  }
  add("boundary identification", ident_ok, ident_detail);
  // orientation
  if (mode == OrientationMode::Z) {
    auto o = orient(w);
    if (!o.orientable()) {
      add("orientation", false, "W is not orientable");
    } else {
      auto induced = induced_boundary_orientation(w, *o.orientation);
      std::map<Simplex, int> sign_of(induced.begin(), induced.end());
      bool consistent = true;
      std::string detail;
      for (std::size_t p = 0; p < images.size(); ++p) {
        auto po = orient(cert.pieces[p].declared);
        if (!po.orientable()) {
          consistent = false;
          detail += cert.pieces[p].name + " is not orientable; ";
          continue;
        }
        // per component of the piece, declared and induced orientations must differ by one sign
        std::map<Vertex, Vertex> f(cert.pieces[p].map.begin(), cert.pieces[p].map.end());
        const auto& decl = cert.pieces[p].declared;
        std::map<Vertex, int> component_sign;
        auto comps = connected_components(decl);
        for (std::size_t i = 0; i < decl.facets().size(); ++i) {
          const auto& facet = decl.facets()[i];
          std::vector<Vertex> mapped;
          for (Vertex v : facet) mapped.push_back(f.at(v));
          // sign of the permutation sorting the mapped vertices
          int perm = 1;
          for (std::size_t a = 0; a < mapped.size(); ++a)
            for (std::size_t b = a + 1; b < mapped.size(); ++b)
              if (mapped[a] > mapped[b]) perm = -perm;
          Simplex image_facet(mapped);
          const int ratio = po.orientation->signs[i] * perm * sign_of.at(image_facet);
          Vertex comp = 0;
          for (std::size_t c = 0; c < comps.size(); ++c)
            if (comps[c].contains(facet)) comp = static_cast<Vertex>(c);
          auto [it, fresh] = component_sign.emplace(comp, ratio);
          if (!fresh && it->second != ratio) consistent = false;
        }
        if (!consistent) detail += cert.pieces[p].name + ": induced orientation disagrees within a component; ";
      }
      add("orientation", consistent, detail);
    }
  } else {
    add("orientation", true, "F2 orientation: every pseudomanifold qualifies");
  }
  // Witt condition on interior strata
  r.witt = witt_condition_check(cert.w, coeffs, bnd);
  std::string wdetail;
  for (const auto& s : r.witt.strata)
    if (s.has_condition && !s.in_boundary) wdetail += "stratum " + std::to_string(s.stratum_dimension) + ": " + s.detail + "; ";
  add("interior Witt condition", r.witt.pass, wdetail);
  // links of pinch points
  for (Vertex p : cert.pinch_points) {
    PinchLinkReport lr;
    lr.vertex = p;
    auto l = link(w, Simplex({p}));
    lr.link_f2 = homology(l, CoefficientSpec::f2()).betti;
    auto ls = candidate_stratification(l).space;
    const int ld = l.dimension();
    lr.ih1_f2 = intersection_homology(ls, middle_perversity(ld), CoefficientSpec::f2()).dim(1);
    lr.ih1_q = intersection_homology(ls, middle_perversity(ld), CoefficientSpec::rationals()).dim(1);
    const long h1 = lr.link_f2.size() > 1 ? lr.link_f2[1] : 0;
    lr.pass = h1 == 0 && lr.ih1_f2 == 0 && lr.ih1_q == 0;
    std::string d = "H(L;F2) =";
    for (auto b : lr.link_f2) d += " " + std::to_string(b);
    d += ", IH1 F2 = " + std::to_string(lr.ih1_f2) + ", IH1 Q = " + std::to_string(lr.ih1_q);
    add("pinch link at vertex " + std::to_string(p), lr.pass, d);
    r.pinch_links.push_back(std::move(lr));
  }
  r.pass = std::all_of(r.checks.begin(), r.checks.end(), [](const BordismCheck& c) { return c.pass; });
  return r;
}

}  // namespace witt
