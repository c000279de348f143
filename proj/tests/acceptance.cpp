// Acceptance suite: one PASS/FAIL line per criterion, each with its runtime
// limit. Exit status is the number of failing criteria.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>

#include "oracles.hpp"
#include "trilink/bounds.hpp"
#include "trilink/diagram.hpp"
#include "trilink/generators.hpp"
#include "trilink/linkset.hpp"
#include "trilink/moves.hpp"
#include "trilink/shelling.hpp"

using namespace trilink;

namespace {

struct Outcome {
  bool ok = true;
  std::ostringstream note;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      note << "failed: " << what;
    }
  }
};

int failures = 0;

void criterion(int id, const char* title, double limit_s, const std::function<void(Outcome&)>& body) {
  Outcome out;
  auto t0 = std::chrono::steady_clock::now();
  try {
    body(out);
  } catch (const std::exception& e) {
    out.ok = false;
    out.note << "exception: " << e.what();
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (out.ok && secs >= limit_s) {
    out.ok = false;
    out.note << "; runtime limit " << limit_s << " s exceeded";
  }
  failures += !out.ok;
  std::printf("%s criterion %d: %s (%.2f s / %.0f s)%s%s\n", out.ok ? "PASS" : "FAIL", id, title, secs, limit_s,
              out.note.str().empty() ? "" : " | ", out.note.str().c_str());
  std::fflush(stdout);
}

}  // namespace

int main() {
  criterion(1, "simplex fixture: Schlegel embeds, all 10 triangles project with 0 < 100 crossings", 1.0, [](Outcome& o) {
    auto g = simplex_boundary();
    auto r = schlegel(g);
    o.require(verify_embedding(r).ok, "verify_embedding on schlegel(simplex)");
    auto links = enumerate_links(g.triangulation, 1, 3);
    o.require(links.size() == 10, "10 triangle links");
    const long bound = cr_bounds_all(5, 3).thm_1_1_1.get_si();
    o.require(bound == 100, "4n^2 = 100");
    for (const auto& l : links) {
      auto dg = project(r, l, generic_direction(r, l));
      o.require(crossing_count(dg) == 0, "zero crossings for " + format_simplex(l.components[0]));
      o.require(static_cast<long>(crossing_count(dg)) < bound, "below 100");
    }
    o.note << "10 diagrams, 0 crossings each";
  });

  criterion(2, "Hopf fixture: >= 5 generic directions, <= 15 < 324 crossings, constant linking number", 5.0,
            [](Outcome& o) {
              auto g = join_of_triangles();
              auto r = schlegel(g);
              o.require(verify_embedding(r).ok, "verify_embedding on schlegel(join)");
              auto l = check_link(g.triangulation, {{1, 2, 3}, {4, 5, 6}});
              const long bound = cr_bounds_all(9, 6).thm_1_1_1.get_si();
              o.require(bound == 324, "4n^2 = 324");
              auto dirs = generic_directions(r, l, 6);
              o.require(dirs.size() >= 5, "at least 5 directions");
              std::optional<long> lk;
              std::vector<std::size_t> counts;
              for (const auto& d : dirs) {
                o.require(genericity_failure(r, l, d).empty(), "direction re-checks as generic");
                auto dg = project(r, l, d);
                auto c = crossing_count(dg);
                counts.push_back(c);
                o.require(c <= 15 && static_cast<long>(c) < bound, "crossing count <= 15 < 324");
                long x = linking_matrix(dg)[0][1];
                o.require(x == 1 || x == -1, "linking number is +-1");
                if (!lk) lk = x;
                o.require(*lk == x, "linking number agrees across directions");
              }
              o.note << dirs.size() << " directions, crossings";
              for (auto c : counts) o.note << ' ' << c;
              o.note << ", lk = " << (lk ? *lk : 0);
            });

  criterion(3, "polytopal fixtures are shellable within the default budget", 30.0, [](Outcome& o) {
    std::vector<GeneratedComplex> fixtures{simplex_boundary(), cyclic_polytope_boundary(6), cyclic_polytope_boundary(7),
                                           cyclic_polytope_boundary(8), join_of_triangles()};
    for (int steps = 0; steps <= 10; ++steps) fixtures.push_back(stacked_sphere(steps, 1000 + steps));
    std::uint64_t nodes = 0;
    for (const auto& g : fixtures) {
      o.require(g.coords4.has_value(), g.provenance + " carries coords4");
      auto s = find_shelling(g.triangulation);
      nodes += s.nodes;
      o.require(s.status == ShellingStatus::found, "shelling found for " + g.provenance);
      if (s.order) o.require(verify_shelling(g.triangulation, *s.order).ok, "order re-verifies for " + g.provenance);
    }
    o.note << fixtures.size() << " fixtures, " << nodes << " search nodes";
  });

  criterion(4, "moves: 100 seeded expansions round-trip; transport adds <= 1 edge and inverts", 30.0, [](Outcome& o) {
    std::vector<Triangulation> fixtures{simplex_boundary().triangulation, join_of_triangles().triangulation,
                                        cyclic_polytope_boundary(7).triangulation, cyclic_polytope_boundary(9).triangulation,
                                        stacked_sphere(6, 17).triangulation,
                                        pachner_walk(simplex_boundary().triangulation, 60, 23)};
    std::vector<std::vector<EdgeLink>> links;
    for (const auto& t : fixtures) links.push_back(enumerate_links(t, 2, 7));
    Lcg64 rng(4242);
    std::size_t transports = 0, grew = 0;
    for (int i = 0; i < 100; ++i) {
      const std::size_t fi = static_cast<std::size_t>(i) % fixtures.size();
      const auto& t = fixtures[fi];
      auto spec = oracle::random_spec(t, rng);
      auto why = check_expansion_spec(t, spec);
      o.require(why.empty(), "generated spec is well-formed: " + why);
      auto [out, rec] = expand(t, spec);
      o.require(validate(out).valid(), "expansion validates");
      auto [back, crec] = contract_edge(out, {spec.vertex, spec.new_label});
      o.require(back == t, "contract(expand(t)) == t bit-exactly");
      // Up to 60 links through the split vertex and 10 avoiding it, spread
      // evenly over the enumeration.
      const auto& ls = links[fi];
      std::vector<std::size_t> through, away;
      for (std::size_t j = 0; j < ls.size(); ++j) {
        auto vs = ls[j].vertices();
        (std::binary_search(vs.begin(), vs.end(), spec.vertex) ? through : away).push_back(j);
      }
      std::vector<std::size_t> pick;
      for (std::size_t q = 0; q < std::min<std::size_t>(60, through.size()); ++q)
        pick.push_back(through[q * through.size() / std::min<std::size_t>(60, through.size())]);
      for (std::size_t q = 0; q < std::min<std::size_t>(10, away.size()); ++q)
        pick.push_back(away[q * away.size() / std::min<std::size_t>(10, away.size())]);
      for (std::size_t j : pick) {
        auto moved = transport_link(ls[j], rec);
        ++transports;
        o.require(check_link(out, moved.components) == moved, "transported link is valid");
        o.require(moved.edge_count() <= ls[j].edge_count() + 1, "at most k+1 edges");
        grew += moved.edge_count() == ls[j].edge_count() + 1;
        o.require(transport_link(moved, crec) == ls[j], "inverse transport restores the link");
      }
    }
    o.note << "100 specs, " << transports << " transports (" << grew << " with k+1 edges)";
  });

  criterion(5, "bound arithmetic reproduces the displayed formulas exactly", 10.0, [](Outcome& o) {
    o.require(shellable_inner(5) == 658001, "25088*25 + 6085*5 + 376 = 658001");
    o.require(cr_bound_from_p(10, 35) == BigInt(658001) * 658001, "(k + 512p^2 + 869p + 376)^2 at k=10, p=35");
    for (long n = 5; n <= 1000; ++n)
      if (!shellable_display_holds(n)) o.require(false, "(25088n^2+6085n+376)^2 < 10^9 n^4 at n = " + std::to_string(n));
    for (long n = 5; n <= 8; ++n)
      if (!general_display_holds(n)) o.require(false, "general display at n = " + std::to_string(n));
    o.note << "n = 5..1000 and n = 5..8 checked";
  });

  criterion(6, "200 seeded Pachner walks satisfy the validation invariants", 60.0, [](Outcome& o) {
    auto base = simplex_boundary().triangulation;
    Lcg64 seeds(6);
    for (int i = 0; i < 200; ++i) {
      const int steps = 1 + static_cast<int>(seeds.below(100));
      auto t = pachner_walk(base, steps, seeds.next());
      auto r = validate(t);
      const auto& f = r.f;
      o.require(r.valid(), "walk output validates");
      o.require(r.euler_characteristic == 0, "chi = 0");
      o.require(f.f2 == 2 * f.f3 && f.f1 == f.f0 + f.f3 && f.f1 <= 2 * f.f3, "f-vector relations");
      for (auto d : dual_graph(t).degrees())
        if (d != 4) o.require(false, "dual graph is 4-regular");
    }
    o.note << "200 walks of 1..100 steps";
  });

  criterion(7, "enumeration and facet oracles agree", 10.0, [](Outcome& o) {
    auto t = simplex_boundary().triangulation;
    auto links = enumerate_links(t, 1, 3);
    auto triples = oracle::triangles_from_triples(t);
    o.require(links.size() == 10 && triples.size() == 10, "10 triangles");
    for (std::size_t i = 0; i < std::min(links.size(), triples.size()); ++i)
      o.require(links[i].components[0] == triples[i], "link matches triple");
    for (int m = 6; m <= 8; ++m) {
      auto hull = oracle::hull_facets(oracle::moment_curve(m));
      std::sort(hull.begin(), hull.end());
      o.require(cyclic_polytope_boundary(m).triangulation.tetrahedra() == hull,
                "Gale evenness matches the hull oracle at m = " + std::to_string(m));
    }
    o.note << "m = 6, 7, 8";
  });

  return failures;
}
