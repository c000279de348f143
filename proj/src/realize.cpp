#include "trilink/realize.hpp"

#include <algorithm>
#include <sstream>

#include "trilink/error.hpp"

namespace trilink {

namespace {

using Matrix = std::vector<std::vector<Rational>>;

Rational det3(const Vec3& r0, const Vec3& r1, const Vec3& r2) {
  return r0[0] * (r1[1] * r2[2] - r1[2] * r2[1]) - r0[1] * (r1[0] * r2[2] - r1[2] * r2[0]) +
         r0[2] * (r1[0] * r2[1] - r1[1] * r2[0]);
}

// Gaussian elimination with exact pivots; nullopt when singular.
std::optional<std::vector<Rational>> solve(Matrix a, std::vector<Rational> b) {
  const std::size_t n = a.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) return std::nullopt;
    std::swap(a[piv], a[col]);
    std::swap(b[piv], b[col]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      Rational f = a[r][col] / a[col][col];
      for (std::size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
      b[r] -= f * b[col];
    }
  }
  for (std::size_t i = 0; i < n; ++i) b[i] /= a[i][i];
  return b;
}

const Vec4& at(const Coords4& c, Vertex v) {
  auto it = c.find(v);
  if (it == c.end()) throw Error("no 4D coordinates for vertex " + std::to_string(v));
  return it->second;
}

const Vec3& at(const Coords3& c, Vertex v) {
  auto it = c.find(v);
  if (it == c.end()) throw Error("no 3D coordinates for vertex " + std::to_string(v));
  return it->second;
}

}  // namespace

Hyperplane4 facet_hyperplane(const Coords4& coords, const Tet& facet) {
  const Vec4& p0 = at(coords, facet[0]);
  std::array<Vec4, 3> v;
  for (std::size_t i = 0; i < 3; ++i) v[i] = at(coords, facet[i + 1]) - p0;
  // normal·x = det[x; v1; v2; v3], expanded along the first row
  Vec4 n;
  for (std::size_t col = 0; col < 4; ++col) {
    std::array<Vec3, 3> minor;
    for (std::size_t r = 0; r < 3; ++r) {
      std::size_t k = 0;
      for (std::size_t c = 0; c < 4; ++c)
        if (c != col) minor[r][k++] = v[r][c];
    }
    Rational d = det3(minor[0], minor[1], minor[2]);
    n[col] = (col % 2 == 0) ? d : Rational(-d);
  }
  return {n, dot(n, p0)};
}

Hyperplane4 outward_hyperplane(const Triangulation& t, const Coords4& coords, const Tet& facet) {
  Hyperplane4 h = facet_hyperplane(coords, facet);
  if (std::all_of(h.normal.begin(), h.normal.end(), [](const Rational& q) { return q == 0; }))
    throw Error("tetrahedron " + format_simplex(facet) + " spans no hyperplane (affinely dependent points)");
  int seen = 0;
  for (Vertex u : t.vertices()) {
    if (face_contains(facet, u)) continue;
    int s = h.side(at(coords, u));
    if (s == 0)
      throw Error("vertex " + std::to_string(u) + " lies on the hyperplane of " + format_simplex(facet) +
                  ": points are not in general convex position");
    if (seen != 0 && s != seen)
      throw Error("tetrahedron " + format_simplex(facet) + " is not a hull facet: vertices on both sides");
    seen = s;
  }
  if (seen > 0) {
    for (auto& q : h.normal) q = -q;
    h.offset = -h.offset;
  }
  return h;
}

std::string check_polytopal_witness(const Triangulation& t, const Coords4& coords) {
  for (Vertex v : t.vertices())
    if (!coords.count(v)) return "no 4D coordinates for vertex " + std::to_string(v);
  try {
    for (const Tet& f : t.tetrahedra()) outward_hyperplane(t, coords, f);
  } catch (const Error& e) {
    return e.what();
  }
  return {};
}

Vec4 beyond_point(const Triangulation& t, const Coords4& coords, const Tet& facet_in) {
  const Tet facet = sorted(facet_in);
  if (!t.has_tet(facet)) throw Error(format_simplex(facet) + " is not a tetrahedron of the triangulation");
  if (auto why = check_polytopal_witness(t, coords); !why.empty())
    throw Error("coordinates do not witness a convex polytope: " + why);

  const Hyperplane4 h = outward_hyperplane(t, coords, facet);
  Vec4 c;
  for (Vertex u : facet) c = c + at(coords, u);
  c = Rational(1, 4) * c;

  std::optional<Rational> sup;
  for (const Tet& g : t.tetrahedra()) {
    if (g == facet) continue;
    Hyperplane4 hg = outward_hyperplane(t, coords, g);
    Rational rate = dot(hg.normal, h.normal);
    if (rate <= 0) continue;
    Rational slack = hg.offset - dot(hg.normal, c);  // > 0: centroid is beneath g
    Rational lim = slack / rate;
    if (!sup || lim < *sup) sup = lim;
  }
  Rational lambda = sup ? Rational(*sup / 2) : Rational(1);
  Vec4 x = c + lambda * h.normal;

  if (h.side(x) <= 0) throw Error("beyond point is not beyond " + format_simplex(facet));
  for (const Tet& g : t.tetrahedra())
    if (g != facet && outward_hyperplane(t, coords, g).side(x) >= 0)
      throw Error("beyond point is not beneath " + format_simplex(g));
  return x;
}

std::vector<Tet> Realization3::retained() const {
  std::vector<Tet> out;
  for (const Tet& x : host.tetrahedra())
    if (!omitted_facet || x != *omitted_facet) out.push_back(x);
  return out;
}

Realization3 schlegel(const Triangulation& t, const Coords4& coords, const Tet& facet_in) {
  const Tet facet = sorted(facet_in);
  const Vec4 eye = beyond_point(t, coords, facet);
  const Hyperplane4 h = outward_hyperplane(t, coords, facet);
  const Vec4& origin = at(coords, facet[0]);
  std::array<Vec4, 3> basis;
  for (std::size_t i = 0; i < 3; ++i) basis[i] = at(coords, facet[i + 1]) - origin;
  Matrix gram(3, std::vector<Rational>(3));
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) gram[i][j] = dot(basis[i], basis[j]);

  Realization3 r;
  r.host = t;
  r.omitted_facet = facet;
  for (Vertex v : t.vertices()) {
    const Vec4& p = at(coords, v);
    Vec4 y = p;
    if (!face_contains(facet, v)) {
      // eye + s(p − eye) on the hyperplane
      Rational s = (h.offset - dot(h.normal, eye)) / dot(h.normal, p - eye);
      y = eye + s * (p - eye);
    }
    Vec4 rel = y - origin;
    std::vector<Rational> rhs(3);
    for (std::size_t i = 0; i < 3; ++i) rhs[i] = dot(basis[i], rel);
    auto sol = solve(gram, rhs);
    if (!sol) throw Error("degenerate facet frame for " + format_simplex(facet));
    r.coords[v] = {(*sol)[0], (*sol)[1], (*sol)[2]};
  }
  return r;
}

Rational orientation3(const Vec3& a, const Vec3& b, const Vec3& c, const Vec3& d) {
  return det3(b - a, c - a, d - a);
}

bool tetrahedra_meet_properly(const Tet& ta, const Tet& tb, const Coords3& coords) {
  // Variables: α over ta, β over tb, all ≥ 0, Σα = Σβ = 1, Σα·a = Σβ·b.
  // The intersection is exactly the shared face iff no feasible point puts
  // weight on a vertex of ta outside tb. Optimum of a bounded LP is attained
  // at a basic feasible solution, so all 5-column bases are enumerated.
  std::array<Vec3, 8> pts;
  std::array<bool, 4> own{};  // ta vertex not in tb
  bool any_shared = false;
  for (std::size_t i = 0; i < 4; ++i) {
    pts[i] = at(coords, ta[i]);
    pts[4 + i] = at(coords, tb[i]);
    own[i] = !face_contains(tb, ta[i]);
    any_shared |= !own[i];
  }
  // Disjoint bounding boxes settle the unshared case quickly.
  if (!any_shared) {
    for (std::size_t k = 0; k < 3; ++k) {
      Rational amin = pts[0][k], amax = pts[0][k], bmin = pts[4][k], bmax = pts[4][k];
      for (std::size_t i = 1; i < 4; ++i) {
        amin = std::min(amin, pts[i][k]);
        amax = std::max(amax, pts[i][k]);
        bmin = std::min(bmin, pts[4 + i][k]);
        bmax = std::max(bmax, pts[4 + i][k]);
      }
      if (amax < bmin || bmax < amin) return true;
    }
  }
  auto column = [&](std::size_t j) {
    std::vector<Rational> col(5);
    const Vec3& p = pts[j];
    Rational s = j < 4 ? Rational(1) : Rational(-1);
    for (std::size_t k = 0; k < 3; ++k) col[k] = s * p[k];
    col[3] = j < 4 ? 1 : 0;
    col[4] = j < 4 ? 0 : 1;
    return col;
  };
  std::array<std::vector<Rational>, 8> cols;
  for (std::size_t j = 0; j < 8; ++j) cols[j] = column(j);
  const std::vector<Rational> rhs{0, 0, 0, 1, 1};

  std::array<bool, 8> pick{};
  std::fill(pick.begin(), pick.begin() + 5, true);
  do {
    std::array<std::size_t, 5> basis{};
    std::size_t m = 0;
    for (std::size_t j = 0; j < 8; ++j)
      if (pick[j]) basis[m++] = j;
    Matrix a(5, std::vector<Rational>(5));
    for (std::size_t r = 0; r < 5; ++r)
      for (std::size_t c = 0; c < 5; ++c) a[r][c] = cols[basis[c]][r];
    auto x = solve(a, rhs);
    if (!x) continue;
    if (std::any_of(x->begin(), x->end(), [](const Rational& q) { return q < 0; })) continue;
    if (!any_shared) return false;  // any feasible point is an improper intersection
    for (std::size_t c = 0; c < 5; ++c)
      if (basis[c] < 4 && own[basis[c]] && (*x)[c] > 0) return false;
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return true;
}

EmbeddingCheck verify_embedding(const Realization3& r) {
  EmbeddingCheck out;
  const auto tets = r.retained();
  for (const Tet& x : tets)
    for (Vertex v : x)
      if (!r.coords.count(v)) {
        out.ok = false;
        out.message = "no 3D coordinates for vertex " + std::to_string(v);
        return out;
      }
  std::vector<char> good(tets.size(), 1);
  for (std::size_t i = 0; i < tets.size(); ++i) {
    const Tet& x = tets[i];
    if (orientation3(r.coords.at(x[0]), r.coords.at(x[1]), r.coords.at(x[2]), r.coords.at(x[3])) == 0) {
      out.degenerate.push_back(x);
      good[i] = 0;
    }
  }
  for (std::size_t i = 0; i < tets.size(); ++i)
    for (std::size_t j = i + 1; j < tets.size(); ++j)
      if (good[i] && good[j] && !tetrahedra_meet_properly(tets[i], tets[j], r.coords))
        out.bad_pairs.emplace_back(tets[i], tets[j]);
  out.ok = out.degenerate.empty() && out.bad_pairs.empty();
  std::ostringstream os;
  if (out.ok) {
    os << "embedded: " << tets.size() << " tetrahedra, " << tets.size() * (tets.size() - 1) / 2 << " pairs checked";
  } else {
    if (!out.degenerate.empty())
      os << out.degenerate.size() << " degenerate tetrahedra (first " << format_simplex(out.degenerate.front()) << ")";
    if (!out.bad_pairs.empty())
      os << (out.degenerate.empty() ? "" : "; ") << out.bad_pairs.size() << " improperly intersecting pairs (first "
         << format_simplex(out.bad_pairs.front().first) << " and " << format_simplex(out.bad_pairs.front().second)
         << ")";
  }
  out.message = os.str();
  return out;
}

}  // namespace trilink
