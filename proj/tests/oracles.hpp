#pragma once

// Independent brute-force oracles. Nothing here calls into the code path it
// is used to check.

#include <gmpxx.h>

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "trilink/complex.hpp"
#include "trilink/moves.hpp"
#include "trilink/realize.hpp"
#include "trilink/rng.hpp"

namespace oracle {

using trilink::Tet;
using trilink::Triangulation;
using trilink::Vertex;

inline bool subset_of(const std::vector<Vertex>& s, const Tet& t) {
  return std::all_of(s.begin(), s.end(), [&](Vertex v) { return std::find(t.begin(), t.end(), v) != t.end(); });
}

inline std::vector<std::vector<Vertex>> k_subsets(const std::vector<Vertex>& vs, std::size_t k) {
  std::vector<std::vector<Vertex>> out;
  std::vector<Vertex> cur;
  std::function<void(std::size_t)> rec = [&](std::size_t from) {
    if (cur.size() == k) {
      out.push_back(cur);
      return;
    }
    for (std::size_t i = from; i < vs.size(); ++i) {
      cur.push_back(vs[i]);
      rec(i + 1);
      cur.pop_back();
    }
  };
  rec(0);
  return out;
}

/// Face counts by testing every vertex subset against every tetrahedron.
inline std::array<std::size_t, 4> faces_by_enumeration(const Triangulation& t) {
  std::array<std::size_t, 4> f{};
  for (std::size_t k = 1; k <= 4; ++k)
    for (const auto& s : k_subsets(t.vertices(), k))
      if (std::any_of(t.tetrahedra().begin(), t.tetrahedra().end(), [&](const Tet& x) { return subset_of(s, x); }))
        ++f[k - 1];
  return f;
}

/// Pairs of tetrahedra sharing three vertices.
inline std::vector<std::pair<std::size_t, std::size_t>> adjacent_tet_pairs(const Triangulation& t) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  const auto& ts = t.tetrahedra();
  for (std::size_t i = 0; i < ts.size(); ++i)
    for (std::size_t j = i + 1; j < ts.size(); ++j) {
      int common = 0;
      for (Vertex v : ts[i]) common += std::find(ts[j].begin(), ts[j].end(), v) != ts[j].end();
      if (common == 3) out.emplace_back(i, j);
    }
  return out;
}

/// Bareiss determinant over big integers.
inline mpz_class det(std::vector<std::vector<mpz_class>> a) {
  const std::size_t n = a.size();
  mpz_class prev = 1;
  int sgn = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t r = k + 1;
      while (r < n && a[r][k] == 0) ++r;
      if (r == n) return 0;
      std::swap(a[r], a[k]);
      sgn = -sgn;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  return sgn * a[n - 1][n - 1];
}

/// Facets of the convex hull of integer points in R^4 in general position:
/// 4-subsets whose affine hyperplane leaves all other points strictly on one
/// side, decided by signs of 5x5 lifted determinants.
inline std::vector<Tet> hull_facets(const std::map<Vertex, std::array<mpz_class, 4>>& pts) {
  std::vector<Vertex> labels;
  for (const auto& [v, p] : pts) labels.push_back(v);
  std::vector<Tet> out;
  for (const auto& s : k_subsets(labels, 4)) {
    int seen = 0;
    bool facet = true;
    for (Vertex q : labels) {
      if (std::find(s.begin(), s.end(), q) != s.end()) continue;
      std::vector<std::vector<mpz_class>> m;
      for (Vertex v : {s[0], s[1], s[2], s[3], q}) {
        std::vector<mpz_class> row{1};
        for (const auto& c : pts.at(v)) row.push_back(c);
        m.push_back(row);
      }
      int sg = sgn(det(m));
      if (sg == 0 || (seen && sg != seen)) {
        facet = false;
        break;
      }
      seen = sg;
    }
    if (facet) out.push_back({s[0], s[1], s[2], s[3]});
  }
  return out;
}

inline std::map<Vertex, std::array<mpz_class, 4>> moment_curve(int m) {
  std::map<Vertex, std::array<mpz_class, 4>> pts;
  for (int i = 1; i <= m; ++i) {
    mpz_class t = i;
    pts[i] = {t, t * t, t * t * t, t * t * t * t};
  }
  return pts;
}

/// Canonical cycles of length 3 from vertex triples.
inline std::vector<std::vector<Vertex>> triangles_from_triples(const Triangulation& t) {
  std::vector<std::vector<Vertex>> out;
  for (const auto& s : k_subsets(t.vertices(), 3))
    if (t.has_edge({s[0], s[1]}) && t.has_edge({s[1], s[2]}) && t.has_edge({s[0], s[2]})) out.push_back(s);
  return out;
}

/// All nonempty faces τ with τ ∩ σ = ∅ and τ ∪ σ in some tetrahedron.
inline std::set<std::vector<Vertex>> link_complex(const Triangulation& t, const std::vector<Vertex>& sigma) {
  std::set<std::vector<Vertex>> out;
  for (std::size_t k = 1; k <= 4 - sigma.size(); ++k)
    for (const auto& tau : k_subsets(t.vertices(), k)) {
      if (std::any_of(tau.begin(), tau.end(),
                      [&](Vertex v) { return std::find(sigma.begin(), sigma.end(), v) != sigma.end(); }))
        continue;
      std::vector<Vertex> u = tau;
      u.insert(u.end(), sigma.begin(), sigma.end());
      if (std::any_of(t.tetrahedra().begin(), t.tetrahedra().end(), [&](const Tet& x) { return subset_of(u, x); }))
        out.insert(tau);
    }
  return out;
}

/// Brute-force isomorphism over all vertex bijections (small complexes only).
inline bool isomorphic(const Triangulation& a, const Triangulation& b) {
  if (a.vertices().size() != b.vertices().size() || a.size() != b.size()) return false;
  std::vector<Vertex> perm = b.vertices();
  do {
    std::map<Vertex, Vertex> m;
    for (std::size_t i = 0; i < perm.size(); ++i) m[a.vertices()[i]] = perm[i];
    bool ok = true;
    for (const Tet& x : a.tetrahedra()) {
      Tet y{m[x[0]], m[x[1]], m[x[2]], m[x[3]]};
      if (!b.has_tet(y)) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

/// Random expansion spec at a random vertex: disk_a grows from one link
/// triangle by attaching triangles either along a single boundary edge with
/// a fresh apex or into a notch of two consecutive boundary edges (whose
/// common vertex becomes interior); both keep it a disk. disk_b is the
/// complementary disk.
inline trilink::ExpansionSpec random_spec(const Triangulation& t, trilink::Lcg64& rng) {
  using trilink::Edge;
  using trilink::Triangle;
  const auto& vs = t.vertices();
  Vertex v = vs[rng.below(vs.size())];
  auto link = trilink::vertex_link(t, v);
  std::vector<Triangle> disk{link[rng.below(link.size())]};
  std::size_t target = 1 + rng.below(link.size() - 1);
  for (std::size_t guard = 0; disk.size() < target && guard < 64; ++guard) {
    std::set<Vertex> in_disk;
    std::map<Edge, int> count;
    for (const auto& f : disk) {
      in_disk.insert(f.begin(), f.end());
      for (const auto& e : trilink::subfaces<2>(f)) ++count[e];
    }
    std::vector<Triangle> options;
    for (const auto& f : link) {
      if (std::find(disk.begin(), disk.end(), f) != disk.end()) continue;
      int boundary_edges = 0;
      for (const auto& e : trilink::subfaces<2>(f)) boundary_edges += count.count(e) && count[e] == 1;
      int outside = 0;
      for (Vertex u : f) outside += !in_disk.count(u);
      int unused_edges = 0;
      for (const auto& e : trilink::subfaces<2>(f)) unused_edges += !count.count(e);
      std::size_t bdry_len = 0;
      for (const auto& [e, c] : count) bdry_len += c == 1;
      if (boundary_edges == 1 && outside == 1) options.push_back(f);
      if (boundary_edges == 2 && unused_edges == 1 && bdry_len > 3) options.push_back(f);
    }
    if (options.empty()) break;
    disk.push_back(options[rng.below(options.size())]);
  }
  std::map<Edge, int> count;
  for (const auto& f : disk)
    for (const auto& e : trilink::subfaces<2>(f)) ++count[e];
  std::vector<Edge> bdry;
  for (const auto& [e, c] : count)
    if (c == 1) bdry.push_back(e);
  trilink::ExpansionSpec s;
  s.vertex = v;
  s.new_label = t.fresh_label();
  s.boundary_cycle = *trilink::cycle_from_edges(bdry);
  std::sort(disk.begin(), disk.end());
  for (const auto& f : link)
    (std::binary_search(disk.begin(), disk.end(), f) ? s.disk_a : s.disk_b).push_back(f);
  if (rng.below(2) == 1) std::swap(s.disk_a, s.disk_b);
  return s;
}

}  // namespace oracle
