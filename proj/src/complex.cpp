#include "trilink/complex.hpp"

#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "trilink/error.hpp"

namespace trilink {

namespace {

template <std::size_t K>
std::vector<Face<K>> collect_faces(const std::vector<Tet>& tets) {
  std::vector<Face<K>> out;
  out.reserve(tets.size() * 6);
  for (const Tet& t : tets)
    for (const auto& f : subfaces<K>(t)) out.push_back(f);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

bool graph_connected(const std::map<Vertex, std::vector<Vertex>>& adj) {
  if (adj.empty()) return true;
  std::set<Vertex> seen{adj.begin()->first};
  std::vector<Vertex> stack{adj.begin()->first};
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : adj.at(v))
      if (seen.insert(w).second) stack.push_back(w);
  }
  return seen.size() == adj.size();
}

// Checks that a set of triangles is a connected closed surface with Euler
// characteristic 2. Returns an empty string on success, else the reason.
std::string check_two_sphere(const std::vector<Triangle>& tris) {
  if (tris.empty()) return "empty link";
  std::map<Edge, int> edge_count;
  std::map<Vertex, std::vector<Edge>> around;  // vertex -> opposite edges in its star
  for (const Triangle& f : tris) {
    for (const Edge& e : subfaces<2>(f)) ++edge_count[e];
    around[f[0]].push_back({f[1], f[2]});
    around[f[1]].push_back({f[0], f[2]});
    around[f[2]].push_back({f[0], f[1]});
  }
  for (const auto& [e, c] : edge_count)
    if (c != 2) {
      std::ostringstream os;
      os << "edge " << format_simplex(e) << " lies in " << c << " link triangles";
      return os.str();
    }
  for (const auto& [v, opposite] : around)
    if (!cycle_from_edges(opposite)) return "link of vertex " + std::to_string(v) + " inside it is not a single circle";
  std::map<Vertex, std::vector<Vertex>> adj;
  for (const auto& [e, c] : edge_count) {
    adj[e[0]].push_back(e[1]);
    adj[e[1]].push_back(e[0]);
  }
  if (!graph_connected(adj)) return "disconnected";
  long chi = static_cast<long>(adj.size()) - static_cast<long>(edge_count.size()) + static_cast<long>(tris.size());
  if (chi != 2) return "Euler characteristic " + std::to_string(chi) + " != 2";
  return {};
}

}  // namespace

std::string format_simplex(const std::vector<Vertex>& s) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < s.size(); ++i) os << (i ? "," : "") << s[i];
  os << '}';
  return os.str();
}

Triangulation::Triangulation(std::vector<Vertex> vertices, std::vector<Tet> tetrahedra) {
  std::sort(vertices.begin(), vertices.end());
  if (std::adjacent_find(vertices.begin(), vertices.end()) != vertices.end())
    throw Error("duplicate vertex label in vertex list");
  for (Tet& t : tetrahedra) {
    t = sorted(t);
    if (std::adjacent_find(t.begin(), t.end()) != t.end())
      throw Error("tetrahedron " + format_simplex(t) + " repeats a vertex");
    for (Vertex v : t)
      if (!std::binary_search(vertices.begin(), vertices.end(), v))
        throw Error("tetrahedron " + format_simplex(t) + " uses vertex " + std::to_string(v) + " outside the vertex set");
  }
  std::sort(tetrahedra.begin(), tetrahedra.end());
  if (auto dup = std::adjacent_find(tetrahedra.begin(), tetrahedra.end()); dup != tetrahedra.end())
    throw Error("duplicate tetrahedron " + format_simplex(*dup));
  std::set<Vertex> used;
  for (const Tet& t : tetrahedra) used.insert(t.begin(), t.end());
  for (Vertex v : vertices)
    if (!used.count(v)) throw Error("vertex " + std::to_string(v) + " lies in no tetrahedron");
  vertices_ = std::move(vertices);
  tets_ = std::move(tetrahedra);
  edges_ = collect_faces<2>(tets_);
  triangles_ = collect_faces<3>(tets_);
}

Triangulation Triangulation::from_tetrahedra(std::vector<Tet> tetrahedra) {
  std::set<Vertex> vs;
  for (const Tet& t : tetrahedra) vs.insert(t.begin(), t.end());
  return Triangulation(std::vector<Vertex>(vs.begin(), vs.end()), std::move(tetrahedra));
}

bool Triangulation::has_edge(Edge e) const {
  return std::binary_search(edges_.begin(), edges_.end(), sorted(e));
}

bool Triangulation::has_triangle(Triangle f) const {
  return std::binary_search(triangles_.begin(), triangles_.end(), sorted(f));
}

std::vector<Edge> Triangulation::edges() const { return edges_; }
std::vector<Triangle> Triangulation::triangles() const { return triangles_; }

std::vector<Tet> Triangulation::star(const std::vector<Vertex>& simplex) const {
  std::vector<Tet> out;
  for (const Tet& t : tets_)
    if (std::all_of(simplex.begin(), simplex.end(), [&](Vertex v) { return face_contains(t, v); }))
      out.push_back(t);
  return out;
}

std::vector<Vertex> Triangulation::neighbors(Vertex v) const {
  std::vector<Vertex> out;
  for (const Edge& e : edges_) {
    if (e[0] == v) out.push_back(e[1]);
    if (e[1] == v) out.push_back(e[0]);
  }
  std::sort(out.begin(), out.end());
  return out;
}

FVector f_vector(const Triangulation& t) {
  return {t.vertices().size(), t.edges().size(), t.triangles().size(), t.size()};
}

std::vector<Triangle> vertex_link(const Triangulation& t, Vertex v) {
  std::vector<Triangle> out;
  for (const Tet& tet : t.tetrahedra()) {
    if (!face_contains(tet, v)) continue;
    Triangle f{};
    std::size_t j = 0;
    for (Vertex w : tet)
      if (w != v) f[j++] = w;
    out.push_back(f);
  }
  return out;
}

std::vector<Edge> edge_link(const Triangulation& t, Edge e) {
  e = sorted(e);
  std::vector<Edge> out;
  for (const Tet& tet : t.tetrahedra()) {
    if (!face_contains(tet, e[0]) || !face_contains(tet, e[1])) continue;
    Edge g{};
    std::size_t j = 0;
    for (Vertex w : tet)
      if (w != e[0] && w != e[1]) g[j++] = w;
    out.push_back(g);
  }
  return out;
}

std::optional<std::vector<Vertex>> cycle_from_edges(const std::vector<Edge>& edges) {
  if (edges.size() < 3) return std::nullopt;
  std::map<Vertex, std::vector<Vertex>> adj;
  for (const Edge& e : edges) {
    if (e[0] == e[1]) return std::nullopt;
    adj[e[0]].push_back(e[1]);
    adj[e[1]].push_back(e[0]);
  }
  for (auto& [v, ns] : adj) {
    if (ns.size() != 2 || ns[0] == ns[1]) return std::nullopt;
    std::sort(ns.begin(), ns.end());
  }
  if (adj.size() != edges.size()) return std::nullopt;
  std::vector<Vertex> cycle;
  Vertex start = adj.begin()->first;
  Vertex prev = start, cur = adj.at(start)[0];
  cycle.push_back(start);
  while (cur != start) {
    cycle.push_back(cur);
    const auto& ns = adj.at(cur);
    Vertex next = ns[0] == prev ? ns[1] : ns[0];
    prev = cur;
    cur = next;
  }
  if (cycle.size() != adj.size()) return std::nullopt;
  return cycle;
}

ValidationReport validate(const Triangulation& t) {
  ValidationReport r;
  r.f = f_vector(t);
  r.euler_characteristic = static_cast<long>(r.f.f0) - static_cast<long>(r.f.f1) + static_cast<long>(r.f.f2) -
                           static_cast<long>(r.f.f3);

  const auto& tets = t.tetrahedra();
  std::map<Triangle, std::vector<std::size_t>> cofaces;
  for (std::size_t i = 0; i < tets.size(); ++i)
    for (const Triangle& f : subfaces<3>(tets[i])) cofaces[f].push_back(i);

  r.is_closed_pseudomanifold = !tets.empty();
  UnionFind uf(tets.size());
  for (const auto& [f, owners] : cofaces) {
    if (owners.size() != 2) {
      r.is_closed_pseudomanifold = false;
      r.failures.push_back({"unpaired_triangle", {f.begin(), f.end()},
                            "triangle " + format_simplex(f) + " lies in " + std::to_string(owners.size()) +
                                " tetrahedra (expected 2)"});
    }
    for (std::size_t j = 1; j < owners.size(); ++j) uf.unite(owners[0], owners[j]);
  }

  r.is_connected = !tets.empty();
  for (std::size_t i = 1; i < tets.size(); ++i)
    if (uf.find(i) != uf.find(0)) {
      r.is_connected = false;
      r.failures.push_back({"disconnected", {tets[i].begin(), tets[i].end()},
                            "tetrahedron " + format_simplex(tets[i]) + " is not reachable from " +
                                format_simplex(tets[0])});
      break;
    }

  r.vertex_links_are_2spheres = !tets.empty();
  for (Vertex v : t.vertices()) {
    std::string why = check_two_sphere(vertex_link(t, v));
    if (!why.empty()) {
      r.vertex_links_are_2spheres = false;
      r.failures.push_back({"vertex_link", {v}, "link of vertex " + std::to_string(v) + " is not a 2-sphere: " + why});
    }
  }

  if (r.euler_characteristic != 0)
    r.failures.push_back({"euler_characteristic", {},
                          "Euler characteristic " + std::to_string(r.euler_characteristic) + " != 0"});
  return r;
}

std::vector<std::size_t> DualGraph::degrees() const {
  std::vector<std::size_t> deg(nodes, 0);
  for (const DualArc& a : arcs) {
    ++deg[a.a];
    ++deg[a.b];
  }
  return deg;
}

DualGraph dual_graph(const Triangulation& t) {
  const auto& tets = t.tetrahedra();
  std::map<Triangle, std::vector<std::size_t>> cofaces;
  for (std::size_t i = 0; i < tets.size(); ++i)
    for (const Triangle& f : subfaces<3>(tets[i])) cofaces[f].push_back(i);
  DualGraph g;
  g.nodes = tets.size();
  for (const auto& [f, owners] : cofaces) {
    if (owners.size() != 2)
      throw Error("dual graph needs a closed complex: triangle " + format_simplex(f) + " lies in " +
                  std::to_string(owners.size()) + " tetrahedra");
    g.arcs.push_back({owners[0], owners[1], f});
  }
  return g;
}

}  // namespace trilink
