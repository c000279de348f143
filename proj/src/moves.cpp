#include "trilink/moves.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "trilink/error.hpp"

namespace trilink {

namespace {

using Simplex = std::vector<Vertex>;

// Closed complex generated by `facets`, excluding the empty simplex.
template <std::size_t N>
std::set<Simplex> closure(const std::vector<Face<N>>& facets) {
  std::set<Simplex> out;
  for (const auto& f : facets) {
    for (unsigned mask = 1; mask < (1u << N); ++mask) {
      Simplex s;
      for (std::size_t i = 0; i < N; ++i)
        if (mask & (1u << i)) s.push_back(f[i]);
      out.insert(s);
    }
  }
  return out;
}

Tet make_tet(Vertex a, Vertex b, Vertex c, Vertex d) { return sorted(Tet{a, b, c, d}); }

Tet cone(Vertex apex, const Triangle& f) { return make_tet(apex, f[0], f[1], f[2]); }

std::vector<Tet> sorted_tets(std::vector<Tet> ts) {
  for (auto& t : ts) t = sorted(t);
  std::sort(ts.begin(), ts.end());
  return ts;
}

std::vector<Triangle> sorted_triangles(std::vector<Triangle> ts) {
  for (auto& t : ts) t = sorted(t);
  std::sort(ts.begin(), ts.end());
  return ts;
}

Triangulation replace_tets(const Triangulation& t, const std::vector<Tet>& removed, const std::vector<Tet>& added) {
  std::vector<Tet> tets;
  for (const Tet& x : t.tetrahedra())
    if (!std::binary_search(removed.begin(), removed.end(), x)) tets.push_back(x);
  tets.insert(tets.end(), added.begin(), added.end());
  return Triangulation::from_tetrahedra(std::move(tets));
}

std::vector<Edge> cycle_edges(const std::vector<Vertex>& cycle) {
  std::vector<Edge> out;
  for (std::size_t i = 0; i < cycle.size(); ++i) out.push_back(sorted(Edge{cycle[i], cycle[(i + 1) % cycle.size()]}));
  std::sort(out.begin(), out.end());
  return out;
}

// Disk diagnostics: "" when `disk` is a triangulated disk whose boundary is
// exactly `boundary` (sorted edges).
std::string check_disk(const std::vector<Triangle>& disk, const std::vector<Edge>& boundary, const char* name) {
  std::ostringstream os;
  if (disk.empty()) {
    os << name << " is empty";
    return os.str();
  }
  std::map<Edge, int> count;
  std::set<Vertex> verts;
  for (const Triangle& f : disk) {
    verts.insert(f.begin(), f.end());
    for (const Edge& e : subfaces<2>(f)) ++count[e];
  }
  std::vector<Edge> bdry;
  for (const auto& [e, c] : count)
    if (c == 1) bdry.push_back(e);
  // connectivity through shared edges
  std::vector<std::size_t> comp(disk.size());
  for (std::size_t i = 0; i < disk.size(); ++i) comp[i] = i;
  auto find = [&](std::size_t x) {
    while (comp[x] != x) x = comp[x] = comp[comp[x]];
    return x;
  };
  std::map<Edge, std::size_t> first_owner;
  for (std::size_t i = 0; i < disk.size(); ++i)
    for (const Edge& e : subfaces<2>(disk[i])) {
      auto [it, fresh] = first_owner.emplace(e, i);
      if (!fresh) comp[find(i)] = find(it->second);
    }
  std::size_t roots = 0;
  for (std::size_t i = 0; i < disk.size(); ++i) roots += find(i) == i;
  long v = static_cast<long>(verts.size()), e = static_cast<long>(count.size()), f = static_cast<long>(disk.size());
  long chi = v - e + f;
  if (roots != 1 || chi != 1 || bdry != boundary || !cycle_from_edges(bdry)) {
    os << name << " is not a disk bounded by the boundary cycle: V=" << v << " E=" << e << " F=" << f
       << " V-E+F=" << chi << " (disk needs 1), components=" << roots << ", boundary edges=" << bdry.size()
       << " (expected " << boundary.size() << ")";
    return os.str();
  }
  return {};
}

}  // namespace

std::string to_string(MoveKind k) {
  switch (k) {
    case MoveKind::contract: return "contract";
    case MoveKind::expand: return "expand";
    case MoveKind::pachner_14: return "pachner_14";
    case MoveKind::pachner_23: return "pachner_23";
    case MoveKind::pachner_32: return "pachner_32";
    case MoveKind::pachner_41: return "pachner_41";
  }
  return "?";
}

MoveKind parse_move_kind(const std::string& s) {
  for (MoveKind k : {MoveKind::contract, MoveKind::expand, MoveKind::pachner_14, MoveKind::pachner_23,
                     MoveKind::pachner_32, MoveKind::pachner_41})
    if (to_string(k) == s) return k;
  throw FormatError("unknown move kind '" + s + "'");
}

Triangulation apply_inverse(const Triangulation& t, const MoveRecord& rec) {
  for (const Tet& x : rec.added)
    if (!t.has_tet(x)) throw Error("record does not match: tetrahedron " + format_simplex(x) + " is absent");
  return replace_tets(t, rec.added, rec.removed);
}

std::optional<std::vector<Vertex>> link_condition_witness(const Triangulation& t, Edge e) {
  auto lk_a = closure(vertex_link(t, e[0]));
  auto lk_b = closure(vertex_link(t, e[1]));
  auto lk_e = closure(edge_link(t, e));
  std::vector<Simplex> bad;
  for (const Simplex& s : lk_a)
    if (lk_b.count(s) && !lk_e.count(s)) bad.push_back(s);
  if (bad.empty()) return std::nullopt;
  // report a top-dimensional witness
  std::stable_sort(bad.begin(), bad.end(), [](const Simplex& x, const Simplex& y) { return x.size() > y.size(); });
  return bad.front();
}

MoveResult contract_edge(const Triangulation& t, Edge e) {
  const Vertex a = e[0], b = e[1];
  if (!t.has_edge(e)) throw Error(format_simplex(e) + " is not an edge");
  if (auto w = link_condition_witness(t, e))
    throw Error("link condition fails for " + format_simplex(e) + ": " + format_simplex(*w) +
                " lies in lk(a) ∩ lk(b) but not in lk(e)");

  ExpansionSpec undo;
  undo.vertex = a;
  undo.new_label = b;
  for (const Triangle& f : vertex_link(t, a))
    if (!face_contains(f, b)) undo.disk_a.push_back(f);
  for (const Triangle& f : vertex_link(t, b))
    if (!face_contains(f, a)) undo.disk_b.push_back(f);
  undo.disk_a = sorted_triangles(undo.disk_a);
  undo.disk_b = sorted_triangles(undo.disk_b);
  auto cyc = cycle_from_edges(edge_link(t, e));
  if (!cyc) throw Error("link of " + format_simplex(e) + " is not a single cycle");
  undo.boundary_cycle = *cyc;

  MoveRecord rec;
  rec.kind = MoveKind::contract;
  rec.location = {a, b};
  rec.edge = Edge{a, b};
  rec.vertex_map = {{b, a}};
  std::vector<Tet> kept;
  for (const Tet& x : t.tetrahedra()) {
    if (face_contains(x, b)) {
      rec.removed.push_back(x);
      if (!face_contains(x, a)) {
        Tet y = x;
        std::replace(y.begin(), y.end(), b, a);
        rec.added.push_back(sorted(y));
      }
    }
  }
  rec.removed = sorted_tets(rec.removed);
  rec.added = sorted_tets(rec.added);
  rec.expansion = std::move(undo);
  return {replace_tets(t, rec.removed, rec.added), std::move(rec)};
}

std::string check_expansion_spec(const Triangulation& t, const ExpansionSpec& spec) {
  std::ostringstream os;
  if (!t.has_vertex(spec.vertex)) {
    os << "vertex " << spec.vertex << " is not in the triangulation";
    return os.str();
  }
  if (t.has_vertex(spec.new_label)) {
    os << "new label " << spec.new_label << " is already in use";
    return os.str();
  }
  auto link = sorted_triangles(vertex_link(t, spec.vertex));
  auto da = sorted_triangles(spec.disk_a);
  auto db = sorted_triangles(spec.disk_b);
  std::vector<Triangle> both;
  std::set_intersection(da.begin(), da.end(), db.begin(), db.end(), std::back_inserter(both));
  if (!both.empty()) return "disks overlap in triangle " + format_simplex(both.front());
  std::vector<Triangle> uni;
  std::merge(da.begin(), da.end(), db.begin(), db.end(), std::back_inserter(uni));
  if (uni != link) return "disks do not partition the link of vertex " + std::to_string(spec.vertex);
  const auto& cyc = spec.boundary_cycle;
  if (cyc.size() < 3 || std::set<Vertex>(cyc.begin(), cyc.end()).size() != cyc.size())
    return "boundary cycle is not a simple cycle of length >= 3";
  auto bdry = cycle_edges(cyc);
  if (auto why = check_disk(da, bdry, "disk_a"); !why.empty()) return why;
  if (auto why = check_disk(db, bdry, "disk_b"); !why.empty()) return why;
  return {};
}

MoveResult expand(const Triangulation& t, const ExpansionSpec& spec) {
  if (auto why = check_expansion_spec(t, spec); !why.empty()) throw Error("malformed expansion: " + why);
  const Vertex a = spec.vertex, b = spec.new_label;
  MoveRecord rec;
  rec.kind = MoveKind::expand;
  rec.location = {a};
  rec.edge = Edge{a, b};
  rec.removed = sorted_tets(t.star({a}));
  for (const Triangle& f : spec.disk_a) rec.added.push_back(cone(a, f));
  for (const Triangle& f : spec.disk_b) rec.added.push_back(cone(b, f));
  for (const Edge& e : cycle_edges(spec.boundary_cycle)) rec.added.push_back(make_tet(a, b, e[0], e[1]));
  rec.added = sorted_tets(rec.added);
  ExpansionSpec canon = spec;
  canon.disk_a = sorted_triangles(canon.disk_a);
  canon.disk_b = sorted_triangles(canon.disk_b);
  rec.expansion = std::move(canon);
  return {replace_tets(t, rec.removed, rec.added), std::move(rec)};
}

ExpansionSpec spec_from_cycle(const Triangulation& t, Vertex v, const std::vector<Vertex>& cycle,
                              const Triangle& side_a_triangle, Vertex new_label) {
  auto link = sorted_triangles(vertex_link(t, v));
  auto cut = cycle_edges(cycle);
  std::set<Triangle> side{sorted(side_a_triangle)};
  if (!std::binary_search(link.begin(), link.end(), sorted(side_a_triangle)))
    throw Error("triangle " + format_simplex(side_a_triangle) + " is not in the link of " + std::to_string(v));
  std::vector<Triangle> stack{sorted(side_a_triangle)};
  while (!stack.empty()) {
    Triangle f = stack.back();
    stack.pop_back();
    for (const Edge& e : subfaces<2>(f)) {
      if (std::binary_search(cut.begin(), cut.end(), e)) continue;
      for (const Triangle& g : link)
        if (face_contains(g, e[0]) && face_contains(g, e[1]) && side.insert(g).second) stack.push_back(g);
    }
  }
  ExpansionSpec spec;
  spec.vertex = v;
  spec.new_label = new_label;
  spec.boundary_cycle = cycle;
  for (const Triangle& f : link) (side.count(f) ? spec.disk_a : spec.disk_b).push_back(f);
  return spec;
}

MoveResult stellar_subdivide(const Triangulation& t, const std::vector<Vertex>& simplex_in) {
  std::vector<Vertex> sigma = simplex_in;
  std::sort(sigma.begin(), sigma.end());
  if (sigma.size() < 2 || sigma.size() > 4) throw Error("stellar subdivision needs an edge, triangle or tetrahedron");
  auto star = t.star(sigma);
  if (star.empty()) throw Error("simplex " + format_simplex(sigma) + " is not in the triangulation");
  const Vertex w = t.fresh_label();
  MoveRecord rec;
  rec.kind = sigma.size() == 4 ? MoveKind::pachner_14 : MoveKind::expand;
  rec.location = sigma;
  rec.removed = sorted_tets(star);
  for (const Tet& x : star) {
    std::vector<Vertex> rest;
    for (Vertex u : x)
      if (!std::binary_search(sigma.begin(), sigma.end(), u)) rest.push_back(u);
    for (std::size_t drop = 0; drop < sigma.size(); ++drop) {
      std::vector<Vertex> vs{w};
      for (std::size_t i = 0; i < sigma.size(); ++i)
        if (i != drop) vs.push_back(sigma[i]);
      vs.insert(vs.end(), rest.begin(), rest.end());
      rec.added.push_back(make_tet(vs[0], vs[1], vs[2], vs[3]));
    }
  }
  rec.added = sorted_tets(rec.added);
  Triangulation out = replace_tets(t, rec.removed, rec.added);

  // Same move as an expansion at sigma's first vertex, found by contracting
  // the new vertex back into it and confirmed by replay.
  auto [back, undo] = contract_edge(out, Edge{sigma.front(), w});
  if (back != t || expand(t, *undo.expansion).first != out)
    throw Error("stellar subdivision of " + format_simplex(sigma) + " is not reproduced by its expansion");
  rec.edge = Edge{sigma.front(), w};
  rec.expansion = undo.expansion;
  return {std::move(out), std::move(rec)};
}

MoveResult pachner_14(const Triangulation& t, const Tet& tet) {
  if (!t.has_tet(tet)) throw Error("tetrahedron " + format_simplex(tet) + " is not in the triangulation");
  return stellar_subdivide(t, {tet.begin(), tet.end()});
}

MoveResult pachner_23(const Triangulation& t, const Triangle& tri_in) {
  Triangle tri = sorted(tri_in);
  auto star = t.star({tri.begin(), tri.end()});
  if (star.size() != 2) throw Error("2-3 flip needs a triangle in exactly two tetrahedra: " + format_simplex(tri));
  auto apex = [&](const Tet& x) {
    for (Vertex u : x)
      if (!face_contains(tri, u)) return u;
    return x[0];
  };
  Vertex d = apex(star[0]), e = apex(star[1]);
  if (t.has_edge({d, e})) throw Error("2-3 flip at " + format_simplex(tri) + " blocked: edge " + format_simplex(Edge{d, e}) + " exists");
  MoveRecord rec;
  rec.kind = MoveKind::pachner_23;
  rec.location = {tri.begin(), tri.end()};
  rec.removed = sorted_tets(star);
  for (const Edge& g : subfaces<2>(tri)) rec.added.push_back(make_tet(g[0], g[1], d, e));
  rec.added = sorted_tets(rec.added);
  return {replace_tets(t, rec.removed, rec.added), std::move(rec)};
}

MoveResult pachner_32(const Triangulation& t, const Edge& edge_in) {
  Edge e = sorted(edge_in);
  auto star = t.star({e[0], e[1]});
  if (star.size() != 3) throw Error("3-2 flip needs an edge of degree 3: " + format_simplex(e));
  std::set<Vertex> opp;
  for (const Tet& x : star)
    for (Vertex u : x)
      if (u != e[0] && u != e[1]) opp.insert(u);
  if (opp.size() != 3) throw Error("3-2 flip at " + format_simplex(e) + ": link is not a triangle");
  Triangle f{};
  std::copy(opp.begin(), opp.end(), f.begin());
  if (t.has_triangle(f)) throw Error("3-2 flip at " + format_simplex(e) + " blocked: triangle " + format_simplex(f) + " exists");
  MoveRecord rec;
  rec.kind = MoveKind::pachner_32;
  rec.location = {e[0], e[1]};
  rec.removed = sorted_tets(star);
  rec.added = sorted_tets({cone(e[0], f), cone(e[1], f)});
  return {replace_tets(t, rec.removed, rec.added), std::move(rec)};
}

MoveResult pachner_41(const Triangulation& t, Vertex v) {
  auto star = t.star({v});
  if (star.size() != 4) throw Error("4-1 flip needs a vertex of degree 4: " + std::to_string(v));
  std::set<Vertex> opp;
  for (const Tet& x : star)
    for (Vertex u : x)
      if (u != v) opp.insert(u);
  if (opp.size() != 4) throw Error("4-1 flip at " + std::to_string(v) + ": link is not a tetrahedron boundary");
  Tet f{};
  std::copy(opp.begin(), opp.end(), f.begin());
  if (t.has_tet(f)) throw Error("4-1 flip at " + std::to_string(v) + " blocked: tetrahedron " + format_simplex(f) + " exists");
  MoveRecord rec;
  rec.kind = MoveKind::pachner_41;
  rec.location = {v};
  rec.removed = sorted_tets(star);
  rec.added = {f};
  return {replace_tets(t, rec.removed, rec.added), std::move(rec)};
}

std::vector<Flip> applicable_flips(const Triangulation& t) {
  std::vector<Flip> out;
  for (const Tet& x : t.tetrahedra()) out.push_back({MoveKind::pachner_14, {x.begin(), x.end()}});

  std::map<Triangle, std::vector<Vertex>> apexes;
  std::map<Edge, std::vector<Tet>> edge_star;
  std::map<Vertex, std::vector<Tet>> vertex_star;
  for (const Tet& x : t.tetrahedra()) {
    for (std::size_t i = 0; i < 4; ++i) {
      Triangle f{};
      std::size_t j = 0;
      for (std::size_t k = 0; k < 4; ++k)
        if (k != i) f[j++] = x[k];
      apexes[f].push_back(x[i]);
      vertex_star[x[i]].push_back(x);
    }
    for (const Edge& e : subfaces<2>(x)) edge_star[e].push_back(x);
  }
  for (const auto& [f, ap] : apexes)
    if (ap.size() == 2 && !t.has_edge({ap[0], ap[1]})) out.push_back({MoveKind::pachner_23, {f.begin(), f.end()}});
  for (const auto& [e, st] : edge_star) {
    if (st.size() != 3) continue;
    std::set<Vertex> opp;
    for (const Tet& x : st)
      for (Vertex u : x)
        if (u != e[0] && u != e[1]) opp.insert(u);
    if (opp.size() != 3) continue;
    Triangle f{};
    std::copy(opp.begin(), opp.end(), f.begin());
    if (!t.has_triangle(f)) out.push_back({MoveKind::pachner_32, {e[0], e[1]}});
  }
  for (const auto& [v, st] : vertex_star) {
    if (st.size() != 4) continue;
    std::set<Vertex> opp;
    for (const Tet& x : st)
      for (Vertex u : x)
        if (u != v) opp.insert(u);
    if (opp.size() != 4) continue;
    Tet f{};
    std::copy(opp.begin(), opp.end(), f.begin());
    if (!t.has_tet(f)) out.push_back({MoveKind::pachner_41, {v}});
  }
  return out;
}

MoveResult apply_flip(const Triangulation& t, const Flip& f) {
  const auto& l = f.location;
  switch (f.kind) {
    case MoveKind::pachner_14: return pachner_14(t, {l.at(0), l.at(1), l.at(2), l.at(3)});
    case MoveKind::pachner_23: return pachner_23(t, {l.at(0), l.at(1), l.at(2)});
    case MoveKind::pachner_32: return pachner_32(t, {l.at(0), l.at(1)});
    case MoveKind::pachner_41: return pachner_41(t, l.at(0));
    default: throw Error("not a bistellar flip: " + to_string(f.kind));
  }
}

namespace {

std::vector<Vertex> transport_through_expansion(const std::vector<Vertex>& cyc, const ExpansionSpec& spec) {
  const Vertex v = spec.vertex, a = spec.vertex, b = spec.new_label;
  auto pos = std::find(cyc.begin(), cyc.end(), v);
  if (pos == cyc.end()) return cyc;
  std::set<Vertex> on_boundary(spec.boundary_cycle.begin(), spec.boundary_cycle.end());
  std::set<Vertex> in_a, in_b;
  for (const Triangle& f : spec.disk_a) in_a.insert(f.begin(), f.end());
  for (const Triangle& f : spec.disk_b) in_b.insert(f.begin(), f.end());
  auto side = [&](Vertex x) {
    if (on_boundary.count(x) || in_a.count(x)) return a;
    if (in_b.count(x)) return b;
    throw Error("link vertex " + std::to_string(x) + " is not adjacent to " + std::to_string(v));
  };
  const std::size_t n = cyc.size(), i = static_cast<std::size_t>(pos - cyc.begin());
  const Vertex prev = cyc[(i + n - 1) % n], next = cyc[(i + 1) % n];
  const Vertex sp = side(prev), sn = side(next);
  std::vector<Vertex> out(cyc.begin(), cyc.begin() + static_cast<long>(i));
  out.push_back(sp);
  if (sn != sp) out.push_back(sn);
  out.insert(out.end(), cyc.begin() + static_cast<long>(i) + 1, cyc.end());
  return out;
}

std::vector<Vertex> transport_through_contraction(const std::vector<Vertex>& cyc, Vertex kept, Vertex removed) {
  std::vector<Vertex> out;
  for (Vertex u : cyc) {
    Vertex w = u == removed ? kept : u;
    if (!out.empty() && out.back() == w) continue;
    out.push_back(w);
  }
  if (out.size() > 1 && out.front() == out.back()) out.pop_back();
  if (std::count(out.begin(), out.end(), kept) > 1)
    throw Error("contraction of " + format_simplex(Edge{kept, removed}) + " makes the link component non-simple");
  return out;
}

}  // namespace

EdgeLink transport_link(const EdgeLink& l, const MoveRecord& rec) {
  std::vector<std::vector<Vertex>> cycles;
  if (rec.kind == MoveKind::contract) {
    if (!rec.edge) throw Error("contract record without an edge");
    for (const auto& c : l.components) cycles.push_back(transport_through_contraction(c, (*rec.edge)[0], (*rec.edge)[1]));
  } else if (rec.expansion && (rec.kind == MoveKind::expand || rec.kind == MoveKind::pachner_14)) {
    for (const auto& c : l.components) cycles.push_back(transport_through_expansion(c, *rec.expansion));
  } else {
    throw Error("link transport needs an expansion or contraction record, got " + to_string(rec.kind));
  }
  EdgeLink out;
  for (auto& c : cycles) {
    if (c.size() < 3) throw Error("transported component degenerates below 3 vertices");
    out.components.push_back(canonical_cycle(std::move(c)));
  }
  std::sort(out.components.begin(), out.components.end());
  std::set<Vertex> seen;
  for (const auto& c : out.components)
    for (Vertex u : c)
      if (!seen.insert(u).second) throw Error("transport merges components at vertex " + std::to_string(u));
  return out;
}

}  // namespace trilink
