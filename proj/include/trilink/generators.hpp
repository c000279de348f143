#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "trilink/complex.hpp"
#include "trilink/realize.hpp"

namespace trilink {

/// A reference triangulation of S^3. `coords4` is present exactly when the
/// generator certifies polytopality with explicit convex-position points.
struct GeneratedComplex {
  Triangulation triangulation;
  std::optional<Coords4> coords4;
  std::string provenance;
};

/// Boundary of the 4-simplex: vertex i -> e_i for i = 1..4, vertex 5 -> origin.
GeneratedComplex simplex_boundary();

/// Gale's evenness condition for a 4-subset of {1..m}.
bool gale_evenness(const Tet& facet, int m);

/// Cyclic 4-polytope on the moment curve t -> (t, t², t³, t⁴), t = 1..m.
GeneratedComplex cyclic_polytope_boundary(int m);

/// Join of two triangles a1a2a3 = {1,2,3} and b1b2b3 = {4,5,6}; the two
/// triangles form a Hopf link in its 1-skeleton.
GeneratedComplex join_of_triangles();

/// Applies `steps` stellar subdivisions of seeded-random tetrahedra to `base`,
/// placing each new vertex at beyond_point() so coordinates stay a witness.
GeneratedComplex stack(const GeneratedComplex& base, int steps, std::uint64_t seed);

/// stack(simplex_boundary(), steps, seed).
GeneratedComplex stacked_sphere(int steps, std::uint64_t seed);

/// Seeded random walk of bistellar flips, chosen uniformly among
/// applicable_flips() at each step.
Triangulation pachner_walk(const Triangulation& start, int steps, std::uint64_t seed);

/// Lexicographically smallest tetrahedron, the default Schlegel facet.
Tet default_facet(const Triangulation& t);

Realization3 schlegel(const GeneratedComplex& g, const Tet& facet);
inline Realization3 schlegel(const GeneratedComplex& g) { return schlegel(g, default_facet(g.triangulation)); }

}  // namespace trilink
