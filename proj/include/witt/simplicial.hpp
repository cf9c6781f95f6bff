#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace witt {

using Vertex = std::int32_t;

/// A simplex stored as a strictly increasing vertex list.
class Simplex {
 public:
  Simplex() = default;
  Simplex(std::initializer_list<Vertex> vs);
  /// Sorts; throws ValidationError on repeated vertices or negative ids.
  explicit Simplex(std::vector<Vertex> vs);
  explicit Simplex(std::span<const Vertex> vs) : Simplex(std::vector<Vertex>(vs.begin(), vs.end())) {}

  int dimension() const { return static_cast<int>(vertices_.size()) - 1; }
  std::size_t size() const { return vertices_.size(); }
  bool empty() const { return vertices_.empty(); }
  const std::vector<Vertex>& vertices() const { return vertices_; }
  std::span<const Vertex> span() const { return vertices_; }
  Vertex operator[](std::size_t i) const { return vertices_[i]; }
  auto begin() const { return vertices_.begin(); }
  auto end() const { return vertices_.end(); }

  bool contains(Vertex v) const;
  bool is_face_of(const Simplex& other) const;
  std::string to_string() const;

  friend auto operator<=>(const Simplex&, const Simplex&) = default;

 private:
  std::vector<Vertex> vertices_;
};

/// Finite abstract simplicial complex given by its facets. Immutable; every
/// face is enumerated at construction and stored per dimension as a sorted
/// flat table so that faces have stable integer indices.
class SimplicialComplex {
 public:
  /// The empty complex (dimension -1).
  SimplicialComplex();
  /// Reduces the list to maximal simplices; accepts an empty list.
  explicit SimplicialComplex(std::vector<Simplex> facets);

  int dimension() const { return dimension_; }
  bool empty() const { return facets_.empty(); }
  const std::vector<Simplex>& facets() const { return facets_; }

  std::size_t count(int d) const;
  std::span<const Vertex> face(int d, std::size_t index) const;
  Simplex simplex(int d, std::size_t index) const { return Simplex(face(d, index)); }
  std::optional<std::size_t> index_of(std::span<const Vertex> s) const;
  bool contains(std::span<const Vertex> s) const { return index_of(s).has_value(); }
  bool contains(const Simplex& s) const { return contains(s.span()); }

  std::vector<Vertex> vertices() const;
  Vertex max_vertex() const;
  std::vector<std::size_t> f_vector() const;
  long euler_characteristic() const;
  bool is_pure() const;
  /// Every facet of `sub` is a simplex of this complex.
  bool has_subcomplex(const SimplicialComplex& sub) const;

  friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) { return a.facets_ == b.facets_; }

 private:
  struct FaceTable {
    std::vector<std::vector<Vertex>> flat;  // flat[d] has stride d+1
  };
  std::vector<Simplex> facets_;
  int dimension_ = -1;
  std::shared_ptr<const FaceTable> faces_;
};

/// Validated constructor: each facet must have distinct vertices and the list must be nonempty.
SimplicialComplex build_complex(const std::vector<std::vector<Vertex>>& facets);

SimplicialComplex link(const SimplicialComplex& x, const Simplex& s);
SimplicialComplex closed_star(const SimplicialComplex& x, const Simplex& s);
/// Simplices of `x` all of whose vertices satisfy the predicate.
template <class Pred>
SimplicialComplex full_subcomplex(const SimplicialComplex& x, Pred&& keep) {
  std::vector<Simplex> out;
  for (const auto& f : x.facets()) {
    std::vector<Vertex> kept;
    for (Vertex v : f)
      if (keep(v)) kept.push_back(v);
    if (!kept.empty()) out.emplace_back(std::move(kept));
  }
  return SimplicialComplex(std::move(out));
}
SimplicialComplex union_of(const SimplicialComplex& a, const SimplicialComplex& b);
/// Simplices of `a` that lie in `b`.
SimplicialComplex intersection_of(const SimplicialComplex& a, const SimplicialComplex& b);
std::vector<SimplicialComplex> connected_components(const SimplicialComplex& x);

struct PseudomanifoldVerdict {
  bool ok = false;
  std::optional<Simplex> witness;
  std::string reason;
};
/// Pure n-dimensional, each (n-1)-simplex in exactly two facets (closed) or
/// one or two facets (with boundary).
PseudomanifoldVerdict is_pseudomanifold(const SimplicialComplex& x, bool closed);
/// Closure of the (n-1)-simplices lying in exactly one facet.
SimplicialComplex boundary_subcomplex(const SimplicialComplex& x);

/// Sign per facet, aligned with `facets()` order, relative to the stored vertex order.
struct Orientation {
  std::vector<int> signs;
};
struct OrientationResult {
  std::optional<Orientation> orientation;
  /// Closed chain of facets (indices into facets()) along which the sign propagation conflicts.
  std::vector<std::size_t> odd_cycle;
  bool orientable() const { return orientation.has_value(); }
};
OrientationResult orient(const SimplicialComplex& x);
/// Boundary orientation induced on the codimension-one faces of `x` lying
/// in one facet, keyed by the face; sign relative to the face's stored order.
std::vector<std::pair<Simplex, int>> induced_boundary_orientation(const SimplicialComplex& x,
                                                                  const Orientation& o);

// Constructors. All outputs are relabeled onto a dense range 0..N-1.
struct Relabeling {
  SimplicialComplex complex;
  std::vector<Vertex> old_of_new;  // old id of each new vertex
};
Relabeling relabel_dense(const SimplicialComplex& x);
SimplicialComplex map_vertices(const SimplicialComplex& x, const std::vector<std::pair<Vertex, Vertex>>& mapping);
SimplicialComplex cone(const SimplicialComplex& x);
SimplicialComplex suspension(const SimplicialComplex& x);
SimplicialComplex disjoint_union(const SimplicialComplex& x, const SimplicialComplex& y);
/// Identifies each class of vertices to one point. Throws ValidationError if
/// two vertices of a class share a simplex or if gluing merges simplices.
SimplicialComplex glue_at_points(const SimplicialComplex& x, const std::vector<std::vector<Vertex>>& classes);
SimplicialComplex wedge(const SimplicialComplex& x, Vertex at_x, const SimplicialComplex& y, Vertex at_y);

/// Staircase triangulation of |x| x |y|. The vertex (a, b) is numbered
/// rank(a) * |V(y)| + rank(b) with ranks taken in sorted vertex order.
SimplicialComplex product(const SimplicialComplex& x, const SimplicialComplex& y);
/// Staircase product of a subcomplex `a` of `x` with `y`, numbered as in product(x, y).
SimplicialComplex product_of_subcomplex(const SimplicialComplex& x, const SimplicialComplex& a,
                                        const SimplicialComplex& y);

/// Barycentric subdivision. Vertex i of the result is the barycenter of origin[i];
/// vertices are ordered by (dimension, lexicographic) of their origin.
struct Subdivision {
  SimplicialComplex complex;
  std::vector<Simplex> origin;
  std::optional<Vertex> vertex_of(const Simplex& s) const;
  /// The subdivision of a subcomplex of the original, as a full subcomplex.
  SimplicialComplex carry(const SimplicialComplex& sub) const;
};
Subdivision barycentric_subdivision(const SimplicialComplex& x);

}  // namespace witt
