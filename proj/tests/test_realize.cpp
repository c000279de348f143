#include <doctest.h>

#include "oracles.hpp"
#include "trilink/error.hpp"
#include "trilink/generators.hpp"
#include "trilink/realize.hpp"

using namespace trilink;

namespace {

// Side of x relative to the hyperplane through `facet`, decided by the
// oracle determinant after clearing denominators.
int oracle_side(const std::map<Vertex, std::array<mpz_class, 4>>& pts, const Tet& facet, const Vec4& x) {
  mpz_class l = 1;
  for (const auto& c : x) l = lcm(l, c.get_den());
  std::vector<std::vector<mpz_class>> m;
  for (Vertex v : facet) {
    std::vector<mpz_class> row{1};
    for (const auto& c : pts.at(v)) row.push_back(c);
    m.push_back(row);
  }
  std::vector<mpz_class> row{l};
  for (const auto& c : x) row.push_back(mpz_class(c * l));
  m.push_back(row);
  return sgn(oracle::det(m));
}

Realization3 realization(const Triangulation& host, Coords3 coords) {
  Realization3 r;
  r.host = host;
  r.coords = std::move(coords);
  return r;
}

}  // namespace

TEST_SUITE("realize") {
  TEST_CASE("beyond point of the standard simplex") {
    auto g = simplex_boundary();
    auto x = beyond_point(g.triangulation, *g.coords4, {1, 2, 3, 4});
    Rational sum = x[0] + x[1] + x[2] + x[3];
    CHECK(sum > 1);
    for (const auto& c : x) CHECK(c > 0);

    auto y = beyond_point(g.triangulation, *g.coords4, {1, 2, 3, 5});
    CHECK(y[3] < 0);
    CHECK(y[0] > 0);
    CHECK(y[1] > 0);
    CHECK(y[2] > 0);
    CHECK(y[0] + y[1] + y[2] + y[3] < 1);
  }

  TEST_CASE("beyond point is beyond exactly one facet (cyclic m = 6)") {
    auto g = cyclic_polytope_boundary(6);
    auto pts = oracle::moment_curve(6);
    auto x = beyond_point(g.triangulation, *g.coords4, {1, 2, 3, 4});
    int beyond = 0;
    for (const Tet& f : oracle::hull_facets(pts)) {
      Vertex inside = 0;
      for (Vertex v = 1; v <= 6; ++v)
        if (!face_contains(f, v)) inside = v;
      Vec4 p;
      for (int i = 0; i < 4; ++i) p[i] = Rational(pts[inside][i]);
      int s = oracle_side(pts, f, x);
      REQUIRE(s != 0);
      if (s != oracle_side(pts, f, p)) {
        ++beyond;
        CHECK(f == Tet{1, 2, 3, 4});
      }
    }
    CHECK(beyond == 1);
  }

  TEST_CASE("beyond point rejects non-facets and non-convex input") {
    auto g = cyclic_polytope_boundary(6);
    auto coords = *g.coords4;
    CHECK_THROWS_AS(beyond_point(g.triangulation, coords, {1, 2, 3, 9}), Error);
    CHECK_THROWS_AS(beyond_point(g.triangulation, coords, {1, 2, 4, 6}), Error);
    // Pull vertex 6 into the hull of the others.
    Vec4 c{};
    for (Vertex v = 1; v <= 5; ++v) c = c + coords[v];
    coords[6] = Rational(1, 5) * c;
    CHECK_THROWS_AS(beyond_point(g.triangulation, coords, {1, 2, 3, 4}), Error);
    CHECK_FALSE(check_polytopal_witness(g.triangulation, coords).empty());
  }

  TEST_CASE("Schlegel image of the simplex puts the apex at the barycenter") {
    auto g = simplex_boundary();
    auto r = schlegel(g, {1, 2, 3, 4});
    CHECK(r.omitted_facet == Tet{1, 2, 3, 4});
    CHECK(r.coords.at(1) == Vec3{0, 0, 0});
    CHECK(r.coords.at(2) == Vec3{1, 0, 0});
    CHECK(r.coords.at(3) == Vec3{0, 1, 0});
    CHECK(r.coords.at(4) == Vec3{0, 0, 1});
    CHECK(r.coords.at(5) == Vec3{Rational(1, 4), Rational(1, 4), Rational(1, 4)});
    CHECK(r.retained().size() == 4);
    CHECK(verify_embedding(r).ok);
  }

  TEST_CASE("every Schlegel facet choice embeds for fixtures with n <= 14") {
    std::vector<GeneratedComplex> fixtures{simplex_boundary(), cyclic_polytope_boundary(6),
                                           cyclic_polytope_boundary(7), join_of_triangles(), stacked_sphere(3, 2)};
    for (const auto& g : fixtures) {
      CAPTURE(g.provenance);
      for (const Tet& f : g.triangulation.tetrahedra()) {
        auto r = schlegel(g, f);
        auto chk = verify_embedding(r);
        CHECK_MESSAGE(chk.ok, chk.message);
        CHECK(r.retained().size() + 1 == g.triangulation.size());
      }
    }
  }

  TEST_CASE("Schlegel output is deterministic") {
    auto g = stacked_sphere(4, 8);
    CHECK(schlegel(g).coords == schlegel(g).coords);
    CHECK(default_facet(g.triangulation) == g.triangulation.tetrahedra().front());
  }

  TEST_CASE("degenerate tetrahedron is reported") {
    auto host = Triangulation::from_tetrahedra({{1, 2, 3, 4}});
    auto r = realization(host, {{1, {0, 0, 0}}, {2, {1, 0, 0}}, {3, {0, 1, 0}}, {4, {1, 1, 0}}});
    auto chk = verify_embedding(r);
    CHECK_FALSE(chk.ok);
    CHECK(chk.degenerate == std::vector<Tet>{{1, 2, 3, 4}});
    CHECK(orientation3({0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {1, 1, 0}) == 0);
  }

  TEST_CASE("overlapping disjoint tetrahedra are reported") {
    auto host = Triangulation::from_tetrahedra({{1, 2, 3, 4}, {5, 6, 7, 8}});
    auto r = realization(host, {{1, {0, 0, 0}},
                                {2, {4, 0, 0}},
                                {3, {0, 4, 0}},
                                {4, {0, 0, 4}},
                                {5, {1, 1, 1}},
                                {6, {5, 1, 1}},
                                {7, {1, 5, 1}},
                                {8, {1, 1, 5}}});
    auto chk = verify_embedding(r);
    CHECK_FALSE(chk.ok);
    REQUIRE(chk.bad_pairs.size() == 1);
    CHECK(chk.bad_pairs[0].first == Tet{1, 2, 3, 4});
    CHECK(chk.bad_pairs[0].second == Tet{5, 6, 7, 8});
    CHECK(chk.message.find("{1,2,3,4}") != std::string::npos);

    r.coords[5] = {10, 10, 10};
    r.coords[6] = {14, 10, 10};
    r.coords[7] = {10, 14, 10};
    r.coords[8] = {10, 10, 14};
    CHECK(verify_embedding(r).ok);
  }

  TEST_CASE("tetrahedra sharing a face must not fold over") {
    Coords3 c{{1, {0, 0, 0}}, {2, {1, 0, 0}}, {3, {0, 1, 0}}, {4, {0, 0, 1}}, {5, {0, 0, 2}}};
    CHECK_FALSE(tetrahedra_meet_properly({1, 2, 3, 4}, {1, 2, 3, 5}, c));
    c[5] = {0, 0, -1};
    CHECK(tetrahedra_meet_properly({1, 2, 3, 4}, {1, 2, 3, 5}, c));
    // Sharing only vertex 1 while overlapping near it.
    Coords3 d{{1, {0, 0, 0}}, {2, {2, 0, 0}}, {3, {0, 2, 0}}, {4, {0, 0, 2}},
              {5, {2, 2, 2}}, {6, {-1, 1, 1}}, {7, {1, -1, 1}}};
    CHECK_FALSE(tetrahedra_meet_properly({1, 2, 3, 4}, {1, 5, 6, 7}, d));
  }
}
