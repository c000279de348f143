#include <doctest.h>

#include <map>

#include "trilink/diagram.hpp"
#include "trilink/error.hpp"
#include "trilink/generators.hpp"
#include "trilink/linkset.hpp"

using namespace trilink;

namespace {

std::size_t count_of(const std::string& hay, const std::string& needle) {
  std::size_t n = 0;
  for (auto p = hay.find(needle); p != std::string::npos; p = hay.find(needle, p + 1)) ++n;
  return n;
}

Realization3 hopf_realization() { return schlegel(join_of_triangles()); }
EdgeLink hopf_link() { return check_link(join_of_triangles().triangulation, {{1, 2, 3}, {4, 5, 6}}); }

// Two triangles separated by the plane x = 5.
Realization3 split_realization() {
  Realization3 r;
  r.host = join_of_triangles().triangulation;
  r.coords = {{1, {0, 0, 0}}, {2, {1, 3, 1}}, {3, {2, 1, 3}},
              {4, {10, 0, 1}}, {5, {11, 2, 0}}, {6, {12, 1, 2}}};
  return r;
}

long inter_signed_sum(const Diagram& dg) {
  long s = 0;
  for (const auto& c : dg.crossings)
    if (c.over_component != c.under_component) s += c.sign;
  return s;
}

}  // namespace

TEST_SUITE("diagram") {
  TEST_CASE("direction candidates and frames") {
    CHECK(direction_candidate(1) == Vec3{1, 1, 1});
    CHECK(direction_candidate(3) == Vec3{1, 3, 9});
    for (long t = 1; t < 6; ++t) {
      auto d = direction_candidate(t);
      auto [u, w] = projection_frame(d);
      CHECK(dot(u, d) == 0);
      CHECK(dot(w, d) == 0);
      CHECK(dot(u, w) == 0);
      CHECK(dot(cross(u, w), d) > 0);
    }
    auto [u, w] = projection_frame({0, 0, 1});
    CHECK(u == Vec3{1, 0, 0});
  }

  TEST_CASE("a triangle projects without crossings") {
    auto g = simplex_boundary();
    auto r = schlegel(g);
    for (const auto& l : enumerate_links(g.triangulation, 1, 3)) {
      auto d = generic_direction(r, l);
      CHECK(genericity_failure(r, l, d).empty());
      auto dg = project(r, l, d);
      CHECK(crossing_count(dg) == 0);
      CHECK(linking_matrix(dg) == std::vector<std::vector<long>>{{0}});
      auto svg = render_svg(dg);
      CHECK(count_of(svg, "<line") == 3);
      CHECK(count_of(svg, "class=\"gap\"") == 0);
      CHECK(generic_direction(r, l) == d);
    }
  }

  TEST_CASE("Hopf link: linking number agrees across directions") {
    auto r = hopf_realization();
    auto l = hopf_link();
    auto dirs = generic_directions(r, l, 6);
    REQUIRE(dirs.size() == 6);
    long lk = 0;
    for (const auto& d : dirs) {
      CHECK(genericity_failure(r, l, d).empty());
      auto dg = project(r, l, d);
      auto c = crossing_count(dg);
      CHECK(c >= 2);
      CHECK(c <= 15);
      CHECK(std::abs(inter_signed_sum(dg)) == 2);
      auto m = linking_matrix(dg);
      REQUIRE(m.size() == 2);
      CHECK(m[0][1] == m[1][0]);
      CHECK(std::abs(m[0][1]) == 1);
      if (lk == 0) lk = m[0][1];
      CHECK(m[0][1] == lk);

      auto svg = render_svg(dg);
      CHECK(count_of(svg, "class=\"gap\"") == c);
      CHECK(count_of(svg, "<line x1") == 6);
    }
  }

  TEST_CASE("PD and Gauss codes are consistent") {
    auto r = hopf_realization();
    auto l = hopf_link();
    auto dg = project(r, l, generic_direction(r, l));
    REQUIRE(dg.pd.size() == dg.crossings.size());
    std::map<std::size_t, int> arc_uses;
    for (const auto& x : dg.pd)
      for (auto a : x) ++arc_uses[a];
    for (const auto& [a, n] : arc_uses) CHECK(n == 2);
    CHECK(arc_uses.size() == 2 * dg.crossings.size());
    CHECK(std::is_sorted(dg.pd.begin(), dg.pd.end()));

    std::map<long, int> seen;
    for (const auto& g : dg.gauss)
      for (long x : g) ++seen[std::labs(x)];
    for (const auto& [id, n] : seen) CHECK(n == 2);
    CHECK(seen.size() == dg.crossings.size());
    CHECK(count_of(pd_text(dg), "X[") == dg.crossings.size());
    CHECK(count_of(gauss_text(dg), "\n") == 2);
  }

  TEST_CASE("split link has linking number zero") {
    auto r = split_realization();
    auto l = hopf_link();
    for (const auto& d : generic_directions(r, l, 5)) {
      auto m = linking_matrix(project(r, l, d));
      CHECK(m[0][1] == 0);
      CHECK(m[1][0] == 0);
    }
  }

  TEST_CASE("a segment parallel to (1,1,1) forces t = 2") {
    Realization3 r;
    r.host = simplex_boundary().triangulation;
    r.coords = {{1, {0, 0, 0}}, {2, {1, 1, 1}}, {3, {1, 0, 0}}, {4, {0, 1, 0}}, {5, {0, 0, 1}}};
    auto l = check_link(r.host, {{1, 2, 3}});
    CHECK(genericity_failure(r, l, {1, 1, 1}).find("parallel") != std::string::npos);
    CHECK_THROWS_AS(project(r, l, {1, 1, 1}), Error);
    CHECK(generic_direction(r, l) == Vec3{1, 2, 4});
  }

  TEST_CASE("crossings never exceed one per non-adjacent pair") {
    auto g = stacked_sphere(4, 3);
    auto r = schlegel(g);
    std::size_t checked = 0;
    for_each_link(g.triangulation, 2, 8, [&](const EdgeLink& l) {
      if (++checked % 7 != 0) return true;
      auto dg = project(r, l, generic_direction(r, l));
      std::size_t k = l.edge_count();
      CHECK(crossing_count(dg) <= k * (k - 1) / 2);
      CHECK(dg.segment_count() == k);
      return checked < 400;
    });
    CHECK(checked > 50);
  }

  TEST_CASE("empty link renders an empty canvas") {
    Diagram dg;
    auto svg = render_svg(dg);
    CHECK(svg.find("<svg") == 0);
    CHECK(count_of(svg, "<line") == 0);
    CHECK(linking_matrix(dg).empty());
  }

  TEST_CASE("rendering is deterministic") {
    auto r = hopf_realization();
    auto l = hopf_link();
    auto d = generic_direction(r, l);
    CHECK(render_svg(project(r, l, d)) == render_svg(project(r, l, d)));
  }
}
