#include "trilink/shelling.hpp"

#include <algorithm>
#include <functional>

#include "trilink/error.hpp"

namespace trilink {

namespace {

// Index-based face incidence so the search step is a handful of array reads.
struct Incidence {
  std::vector<std::array<std::size_t, 4>> tri_of, vert_of;
  std::vector<std::array<std::size_t, 6>> edge_of;
  std::size_t n_tri = 0, n_edge = 0, n_vert = 0;

  explicit Incidence(const Triangulation& t) {
    auto tris = t.triangles();
    auto edges = t.edges();
    const auto& verts = t.vertices();
    n_tri = tris.size();
    n_edge = edges.size();
    n_vert = verts.size();
    for (const Tet& x : t.tetrahedra()) {
      std::array<std::size_t, 4> tr{}, ve{};
      std::array<std::size_t, 6> ed{};
      auto fs = subfaces<3>(x);
      auto es = subfaces<2>(x);
      for (std::size_t i = 0; i < 4; ++i) {
        tr[i] = static_cast<std::size_t>(std::lower_bound(tris.begin(), tris.end(), fs[i]) - tris.begin());
        ve[i] = static_cast<std::size_t>(std::lower_bound(verts.begin(), verts.end(), x[i]) - verts.begin());
      }
      for (std::size_t i = 0; i < 6; ++i)
        ed[i] = static_cast<std::size_t>(std::lower_bound(edges.begin(), edges.end(), es[i]) - edges.begin());
      tri_of.push_back(tr);
      vert_of.push_back(ve);
      edge_of.push_back(ed);
    }
  }
};

struct Union {
  const Incidence& inc;
  std::vector<int> tri, edge, vert;

  explicit Union(const Incidence& i) : inc(i), tri(i.n_tri), edge(i.n_edge), vert(i.n_vert) {}

  void add(std::size_t k, int delta) {
    for (auto f : inc.tri_of[k]) tri[f] += delta;
    for (auto f : inc.edge_of[k]) edge[f] += delta;
    for (auto f : inc.vert_of[k]) vert[f] += delta;
  }

  int shared_triangles(std::size_t k) const {
    int c = 0;
    for (auto f : inc.tri_of[k]) c += tri[f] > 0;
    return c;
  }

  // Does tetrahedron k meet the union in a pure 2-complex of j triangles
  // (1 <= j <= 3, or j = 4 when it is the last one)?
  bool fits(std::size_t k, bool last) const {
    // Local numbering: triangle i omits vertex i; edge (a,b) in subfaces order.
    static constexpr std::array<std::array<int, 2>, 6> kEdgeVerts{{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};
    // subfaces<3> of a sorted tet in lexicographic order omit vertex 3, 2, 1, 0
    static constexpr std::array<int, 4> kOmitted{3, 2, 1, 0};
    std::array<bool, 4> tri_in{};
    int j = 0;
    for (std::size_t i = 0; i < 4; ++i) {
      tri_in[i] = tri[inc.tri_of[k][i]] > 0;
      j += tri_in[i];
    }
    if (last ? j != 4 : (j < 1 || j > 3)) return false;
    for (std::size_t e = 0; e < 6; ++e) {
      bool generated = false;
      for (std::size_t i = 0; i < 4; ++i) {
        int om = kOmitted[i];
        if (tri_in[i] && om != kEdgeVerts[e][0] && om != kEdgeVerts[e][1]) generated = true;
      }
      if ((edge[inc.edge_of[k][e]] > 0) != generated) return false;
    }
    for (std::size_t v = 0; v < 4; ++v) {
      bool generated = false;
      for (std::size_t i = 0; i < 4; ++i)
        if (tri_in[i] && kOmitted[i] != static_cast<int>(v)) generated = true;
      if ((vert[inc.vert_of[k][v]] > 0) != generated) return false;
    }
    return true;
  }
};

}  // namespace

std::string to_string(ShellingStatus s) {
  switch (s) {
    case ShellingStatus::found: return "found";
    case ShellingStatus::none: return "none";
    case ShellingStatus::budget_exhausted: return "budget_exhausted";
  }
  return "?";
}

ShellingCheck verify_shelling(const Triangulation& t, const ShellingOrder& order) {
  std::vector<Tet> canon;
  for (const Tet& x : order) canon.push_back(sorted(x));
  auto check = canon;
  std::sort(check.begin(), check.end());
  if (check != t.tetrahedra()) throw Error("shelling order is not a permutation of the tetrahedra");

  const auto& tets = t.tetrahedra();
  Incidence inc(t);
  Union u(inc);
  ShellingCheck r;
  for (std::size_t k = 0; k < canon.size(); ++k) {
    std::size_t idx = static_cast<std::size_t>(std::lower_bound(tets.begin(), tets.end(), canon[k]) - tets.begin());
    if (k > 0 && !u.fits(idx, k + 1 == canon.size())) {
      r.failing_index = k + 1;
      r.message = "tetrahedron " + format_simplex(canon[k]) + " at position " + std::to_string(k + 1) +
                  " meets its predecessors in " + std::to_string(u.shared_triangles(idx)) +
                  " triangles plus stray faces or in the wrong number of triangles";
      return r;
    }
    u.add(idx, 1);
  }
  r.ok = true;
  r.message = "shelling of " + std::to_string(canon.size()) + " tetrahedra";
  return r;
}

ShellingSearch find_shelling(const Triangulation& t, std::uint64_t budget) {
  const auto& tets = t.tetrahedra();
  const std::size_t n = tets.size();
  Incidence inc(t);
  Union u(inc);
  std::vector<char> used(n, 0);
  std::vector<std::size_t> path;
  ShellingSearch out;
  bool exhausted = false;

  std::function<bool()> dfs = [&]() -> bool {
    if (path.size() == n) return true;
    const bool last = path.size() + 1 == n;
    std::vector<std::pair<int, std::size_t>> cand;
    for (std::size_t k = 0; k < n; ++k) {
      if (used[k]) continue;
      if (path.empty() || u.fits(k, last)) cand.emplace_back(u.shared_triangles(k), k);
    }
    std::sort(cand.begin(), cand.end(), std::greater<>());
    for (const auto& [shared, k] : cand) {
      if (out.nodes >= budget) {
        exhausted = true;
        return false;
      }
      ++out.nodes;
      used[k] = 1;
      u.add(k, 1);
      path.push_back(k);
      if (dfs()) return true;
      path.pop_back();
      u.add(k, -1);
      used[k] = 0;
      if (exhausted) return false;
    }
    return false;
  };

  if (n > 0 && dfs()) {
    out.status = ShellingStatus::found;
    ShellingOrder order;
    for (std::size_t k : path) order.push_back(tets[k]);
    out.order = std::move(order);
  } else {
    out.status = exhausted || (n > 0 && budget == 0) ? ShellingStatus::budget_exhausted : ShellingStatus::none;
  }
  return out;
}

}  // namespace trilink
