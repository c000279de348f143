#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "trilink/complex.hpp"
#include "trilink/rational.hpp"

namespace trilink {

using Coords4 = std::map<Vertex, Vec4>;
using Coords3 = std::map<Vertex, Vec3>;

/// Oriented hyperplane {x : normal·x = offset} in R^4.
struct Hyperplane4 {
  Vec4 normal;
  Rational offset;

  /// Sign of normal·x − offset.
  int side(const Vec4& x) const { return sign(dot(normal, x) - offset); }
};

/// Hyperplane through the four points of `facet`, normal = generalized cross
/// product of the edge vectors from the first vertex (not yet oriented).
Hyperplane4 facet_hyperplane(const Coords4& coords, const Tet& facet);

/// Hyperplane of `facet` oriented so that every other vertex of `t` is
/// strictly negative. Throws Error when some vertex lies on it or on the
/// wrong side.
Hyperplane4 outward_hyperplane(const Triangulation& t, const Coords4& coords, const Tet& facet);

/// Checks that `coords` witnesses `t` as the boundary complex of a simplicial
/// convex 4-polytope: every tetrahedron spans a supporting hyperplane with
/// all other vertices strictly beneath it. Empty string on success.
std::string check_polytopal_witness(const Triangulation& t, const Coords4& coords);

/// A point strictly beyond `facet` and strictly beneath every other facet:
/// facet centroid + λ·(outward normal), λ half of the largest admissible
/// value (λ = 1 when no other facet constrains it).
Vec4 beyond_point(const Triangulation& t, const Coords4& coords, const Tet& facet);

/// A straight-line map of a triangulation into R^3.
struct Realization3 {
  Triangulation host;
  Coords3 coords;
  std::optional<Tet> omitted_facet;  // set by the Schlegel construction

  std::vector<Tet> retained() const;
};

/// Schlegel diagram: central projection from beyond_point(facet) onto the
/// facet hyperplane, written in the affine frame whose origin is the smallest
/// facet vertex and whose basis runs to the other three in label order.
Realization3 schlegel(const Triangulation& t, const Coords4& coords, const Tet& facet);

/// Signed volume determinant det[b−a, c−a, d−a].
Rational orientation3(const Vec3& a, const Vec3& b, const Vec3& c, const Vec3& d);

/// True iff conv(A) ∩ conv(B) = conv(shared vertices), decided by an exact
/// rational LP. `a`, `b` are the four vertices of each (non-degenerate)
/// tetrahedron; shared vertices are those with equal labels.
bool tetrahedra_meet_properly(const Tet& ta, const Tet& tb, const Coords3& coords);

struct EmbeddingCheck {
  bool ok = true;
  std::vector<Tet> degenerate;                      // zero orientation determinant
  std::vector<std::pair<Tet, Tet>> bad_pairs;       // improper intersections
  std::string message;
};

/// Exact check that the retained tetrahedra form a geometric simplicial
/// complex: all non-degenerate, and any two meet exactly in their common face.
EmbeddingCheck verify_embedding(const Realization3& r);

}  // namespace trilink
