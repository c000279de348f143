#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace trilink {

using Vertex = int;

/// A simplex stored canonically as a sorted tuple of vertex labels.
template <std::size_t N>
using Face = std::array<Vertex, N>;
using Edge = Face<2>;
using Triangle = Face<3>;
using Tet = Face<4>;

template <std::size_t N>
Face<N> sorted(Face<N> f) {
  std::sort(f.begin(), f.end());
  return f;
}

/// All K-element subfaces of a sorted face, in lexicographic order.
template <std::size_t K, std::size_t N>
std::vector<Face<K>> subfaces(const Face<N>& f) {
  static_assert(K >= 1 && K <= N);
  std::vector<Face<K>> out;
  std::array<bool, N> pick{};
  std::fill(pick.begin(), pick.begin() + K, true);
  do {
    Face<K> g{};
    std::size_t j = 0;
    for (std::size_t i = 0; i < N; ++i)
      if (pick[i]) g[j++] = f[i];
    out.push_back(g);
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return out;
}

template <std::size_t N>
bool face_contains(const Face<N>& f, Vertex v) {
  return std::find(f.begin(), f.end(), v) != f.end();
}

/// Abstract simplicial 3-complex given by its tetrahedra over integer labels.
///
/// Construction canonicalizes (each tetrahedron sorted, list sorted) and
/// rejects structural malformation: repeated vertex in a tetrahedron,
/// duplicate tetrahedra, labels outside the vertex set, and vertices that lie
/// in no tetrahedron. Immutable afterwards.
class Triangulation {
 public:
  Triangulation() = default;
  Triangulation(std::vector<Vertex> vertices, std::vector<Tet> tetrahedra);

  /// Vertex set taken as the union of the tetrahedra.
  static Triangulation from_tetrahedra(std::vector<Tet> tetrahedra);

  const std::vector<Vertex>& vertices() const { return vertices_; }
  const std::vector<Tet>& tetrahedra() const { return tets_; }
  std::size_t size() const { return tets_.size(); }
  Vertex max_label() const { return vertices_.empty() ? 0 : vertices_.back(); }
  Vertex fresh_label() const { return max_label() + 1; }

  bool has_vertex(Vertex v) const { return std::binary_search(vertices_.begin(), vertices_.end(), v); }
  bool has_tet(const Tet& t) const { return std::binary_search(tets_.begin(), tets_.end(), sorted(t)); }
  bool has_edge(Edge e) const;
  bool has_triangle(Triangle f) const;

  std::vector<Edge> edges() const;
  std::vector<Triangle> triangles() const;

  /// Tetrahedra containing every vertex of `simplex` (its closed star's facets).
  std::vector<Tet> star(const std::vector<Vertex>& simplex) const;

  /// Neighbors of v in the 1-skeleton, sorted.
  std::vector<Vertex> neighbors(Vertex v) const;

  friend bool operator==(const Triangulation&, const Triangulation&) = default;

 private:
  std::vector<Vertex> vertices_;
  std::vector<Tet> tets_;
  std::vector<Edge> edges_;
  std::vector<Triangle> triangles_;
};

struct FVector {
  std::size_t f0 = 0, f1 = 0, f2 = 0, f3 = 0;
  friend bool operator==(const FVector&, const FVector&) = default;
};

struct Defect {
  std::string kind;              // e.g. "unpaired_triangle", "vertex_link"
  std::vector<Vertex> simplex;   // where it happened
  std::string message;
};

struct ValidationReport {
  bool is_closed_pseudomanifold = false;
  bool is_connected = false;
  bool vertex_links_are_2spheres = false;
  long euler_characteristic = 0;
  FVector f;
  std::vector<Defect> failures;

  bool valid() const {
    return is_closed_pseudomanifold && is_connected && vertex_links_are_2spheres && euler_characteristic == 0;
  }
};

/// Combinatorial check that `t` is a closed, connected 3-manifold whose vertex
/// links are 2-spheres. Certifies a 3-manifold; being S^3 is assumed.
ValidationReport validate(const Triangulation& t);

FVector f_vector(const Triangulation& t);

struct DualArc {
  std::size_t a = 0, b = 0;  // indices into t.tetrahedra(), a < b
  Triangle face{};
};

/// The dual 1-skeleton: one node per tetrahedron, one arc per triangle.
struct DualGraph {
  std::size_t nodes = 0;
  std::vector<DualArc> arcs;

  std::vector<std::size_t> degrees() const;
};

/// Throws Error naming an unpaired triangle when `t` is not closed.
DualGraph dual_graph(const Triangulation& t);

/// Link of a vertex: triangles opposite v in the tetrahedra containing v.
std::vector<Triangle> vertex_link(const Triangulation& t, Vertex v);

/// Link of an edge: opposite edges of the tetrahedra containing it.
std::vector<Edge> edge_link(const Triangulation& t, Edge e);

/// Orders the edges of a single closed cycle into a vertex sequence starting
/// at its minimum vertex, second vertex the smaller neighbor. Empty optional
/// when the edges do not form exactly one simple cycle.
std::optional<std::vector<Vertex>> cycle_from_edges(const std::vector<Edge>& edges);

std::string format_simplex(const std::vector<Vertex>& s);

template <std::size_t N>
std::string format_simplex(const Face<N>& f) {
  return format_simplex(std::vector<Vertex>(f.begin(), f.end()));
}

}  // namespace trilink
