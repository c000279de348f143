#include "trilink/generators.hpp"

#include "trilink/error.hpp"
#include "trilink/moves.hpp"
#include "trilink/rng.hpp"

namespace trilink {

GeneratedComplex simplex_boundary() {
  std::vector<Tet> tets;
  for (const Tet& t : subfaces<4>(Face<5>{1, 2, 3, 4, 5})) tets.push_back(t);
  Coords4 c;
  for (int i = 1; i <= 4; ++i) {
    Vec4 e{0, 0, 0, 0};
    e[static_cast<std::size_t>(i - 1)] = 1;
    c[i] = e;
  }
  c[5] = Vec4{0, 0, 0, 0};
  return {Triangulation::from_tetrahedra(std::move(tets)), std::move(c), "simplex"};
}

bool gale_evenness(const Tet& facet, int m) {
  const Tet s = sorted(facet);
  for (int i = 1; i <= m; ++i)
    for (int j = i + 1; j <= m; ++j) {
      if (face_contains(s, i) || face_contains(s, j)) continue;
      int between = 0;
      for (Vertex v : s) between += (v > i && v < j);
      if (between % 2 != 0) return false;
    }
  return true;
}

GeneratedComplex cyclic_polytope_boundary(int m) {
  if (m < 5) throw Error("cyclic polytope needs m >= 5, got " + std::to_string(m));
  std::vector<Vertex> all;
  for (int i = 1; i <= m; ++i) all.push_back(i);
  std::vector<Tet> tets;
  for (int a = 1; a <= m; ++a)
    for (int b = a + 1; b <= m; ++b)
      for (int c = b + 1; c <= m; ++c)
        for (int d = c + 1; d <= m; ++d)
          if (gale_evenness({a, b, c, d}, m)) tets.push_back({a, b, c, d});
  Coords4 coords;
  for (int i = 1; i <= m; ++i) {
    Rational t = i;
    coords[i] = Vec4{t, t * t, t * t * t, t * t * t * t};
  }
  return {Triangulation(all, std::move(tets)), std::move(coords), "cyclic(" + std::to_string(m) + ")"};
}

GeneratedComplex join_of_triangles() {
  const std::array<Edge, 3> a_edges{Edge{1, 2}, Edge{1, 3}, Edge{2, 3}};
  const std::array<Edge, 3> b_edges{Edge{4, 5}, Edge{4, 6}, Edge{5, 6}};
  std::vector<Tet> tets;
  for (const Edge& ea : a_edges)
    for (const Edge& eb : b_edges) tets.push_back({ea[0], ea[1], eb[0], eb[1]});
  Coords4 c;
  c[1] = Vec4{2, 0, 0, 0};
  c[2] = Vec4{-1, 1, 0, 0};
  c[3] = Vec4{-1, -1, 0, 0};
  c[4] = Vec4{0, 0, 2, 0};
  c[5] = Vec4{0, 0, -1, 1};
  c[6] = Vec4{0, 0, -1, -1};
  return {Triangulation::from_tetrahedra(std::move(tets)), std::move(c), "join_of_triangles"};
}

GeneratedComplex stack(const GeneratedComplex& base, int steps, std::uint64_t seed) {
  if (!base.coords4) throw Error("stacking needs a polytopal witness on the base complex");
  GeneratedComplex g = base;
  Lcg64 rng(seed);
  for (int s = 0; s < steps; ++s) {
    const auto& tets = g.triangulation.tetrahedra();
    const Tet facet = tets[rng.below(tets.size())];
    Vec4 p = beyond_point(g.triangulation, *g.coords4, facet);
    Vertex w = g.triangulation.fresh_label();
    g.triangulation = pachner_14(g.triangulation, facet).first;
    (*g.coords4)[w] = std::move(p);
  }
  g.provenance = "stacked(steps=" + std::to_string(steps) + ",seed=" + std::to_string(seed) + ")";
  if (base.provenance != "simplex") g.provenance += " over " + base.provenance;
  return g;
}

GeneratedComplex stacked_sphere(int steps, std::uint64_t seed) { return stack(simplex_boundary(), steps, seed); }

Triangulation pachner_walk(const Triangulation& start, int steps, std::uint64_t seed) {
  if (!validate(start).valid()) throw Error("pachner_walk needs a valid closed 3-manifold to start from");
  Triangulation t = start;
  Lcg64 rng(seed);
  for (int s = 0; s < steps; ++s) {
    auto flips = applicable_flips(t);
    if (flips.empty()) throw Error("no applicable flip at step " + std::to_string(s));
    t = apply_flip(t, flips[rng.below(flips.size())]).first;
  }
  return t;
}

Tet default_facet(const Triangulation& t) {
  if (t.tetrahedra().empty()) throw Error("empty triangulation has no facet");
  return t.tetrahedra().front();
}

Realization3 schlegel(const GeneratedComplex& g, const Tet& facet) {
  if (!g.coords4) throw Error("Schlegel projection needs 4D coordinates (" + g.provenance + " has none)");
  return schlegel(g.triangulation, *g.coords4, facet);
}

}  // namespace trilink
