#include <doctest.h>

#include "oracles.hpp"
#include "trilink/error.hpp"
#include "trilink/generators.hpp"
#include "trilink/moves.hpp"

using namespace trilink;

TEST_SUITE("generators") {
  TEST_CASE("simplex boundary") {
    auto g = simplex_boundary();
    CHECK(g.triangulation.size() == 5);
    for (const auto& s : oracle::k_subsets({1, 2, 3, 4, 5}, 4)) CHECK(g.triangulation.has_tet({s[0], s[1], s[2], s[3]}));
    REQUIRE(g.coords4);
    CHECK(g.coords4->at(5) == Vec4{0, 0, 0, 0});
    CHECK(g.coords4->at(2) == Vec4{0, 1, 0, 0});
    CHECK(check_polytopal_witness(g.triangulation, *g.coords4).empty());
  }

  TEST_CASE("cyclic facets match the brute-force hull for m = 5..12") {
    for (int m = 5; m <= 12; ++m) {
      CAPTURE(m);
      auto g = cyclic_polytope_boundary(m);
      auto hull = oracle::hull_facets(oracle::moment_curve(m));
      std::sort(hull.begin(), hull.end());
      CHECK(g.triangulation.tetrahedra() == hull);
      CHECK(g.triangulation.size() == static_cast<std::size_t>(m * (m - 3) / 2));
      CHECK(validate(g.triangulation).valid());
    }
    CHECK(cyclic_polytope_boundary(6).triangulation.size() == 9);
    CHECK(cyclic_polytope_boundary(7).triangulation.size() == 14);
    CHECK_THROWS_AS(cyclic_polytope_boundary(4), Error);
  }

  TEST_CASE("cyclic m = 5 is the simplex boundary") {
    CHECK(cyclic_polytope_boundary(5).triangulation == simplex_boundary().triangulation);
  }

  TEST_CASE("join of triangles") {
    auto g = join_of_triangles();
    const auto& t = g.triangulation;
    CHECK(f_vector(t) == FVector{6, 15, 18, 9});
    CHECK(t.edges().size() == 15);
    CHECK(validate(t).valid());
    CHECK(t.has_edge({1, 2}));
    CHECK(t.has_edge({2, 3}));
    CHECK(t.has_edge({4, 6}));
    REQUIRE(g.coords4);
    CHECK(check_polytopal_witness(t, *g.coords4).empty());
  }

  TEST_CASE("stacked spheres") {
    CHECK(stacked_sphere(0, 1).triangulation == simplex_boundary().triangulation);
    auto one = stacked_sphere(1, 1);
    CHECK(one.triangulation.size() == 8);
    CHECK(one.triangulation.vertices().size() == 6);
    auto big = stacked_sphere(10, 7);
    CHECK(big.triangulation.size() == 35);
    CHECK(validate(big.triangulation).valid());
    REQUIRE(big.coords4);
    CHECK(check_polytopal_witness(big.triangulation, *big.coords4).empty());
    CHECK(stacked_sphere(10, 7).coords4 == big.coords4);
  }

  TEST_CASE("pachner walks") {
    auto base = simplex_boundary().triangulation;
    CHECK(pachner_walk(base, 0, 42) == base);
    // From the simplex boundary only 1-4 flips apply.
    auto flips = applicable_flips(base);
    for (const auto& f : flips) CHECK(f.kind == MoveKind::pachner_14);
    CHECK(pachner_walk(base, 1, 3).size() == 8);
    auto w = pachner_walk(base, 50, 3);
    auto r = validate(w);
    CHECK(r.valid());
    CHECK(r.euler_characteristic == 0);
    CHECK(pachner_walk(base, 50, 3) == w);
    CHECK_THROWS_AS(pachner_walk(Triangulation::from_tetrahedra({{1, 2, 3, 4}}), 1, 0), Error);
  }

  TEST_CASE("walks keep the f-vector relations at every step") {
    auto t = simplex_boundary().triangulation;
    Lcg64 rng(99);
    for (int i = 0; i < 60; ++i) {
      t = pachner_walk(t, 1, rng.next());
      auto f = f_vector(t);
      CHECK(f.f2 == 2 * f.f3);
      CHECK(f.f1 == f.f0 + f.f3);
    }
  }

  TEST_CASE("the generator is the documented LCG") {
    Lcg64 r(0);
    CHECK(r.next() == 1442695040888963407ULL);
    CHECK(r.next() == 1442695040888963407ULL * 6364136223846793005ULL + 1442695040888963407ULL);
    Lcg64 a(5), b(5);
    for (int i = 0; i < 10; ++i) CHECK(a.below(7) == b.below(7));
  }
}
