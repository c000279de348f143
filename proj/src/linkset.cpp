#include "trilink/linkset.hpp"

#include <algorithm>
#include <set>

#include "trilink/error.hpp"

namespace trilink {

std::size_t EdgeLink::edge_count() const {
  std::size_t k = 0;
  for (const auto& c : components) k += c.size();
  return k;
}

std::vector<Vertex> EdgeLink::vertices() const {
  std::vector<Vertex> vs;
  for (const auto& c : components) vs.insert(vs.end(), c.begin(), c.end());
  std::sort(vs.begin(), vs.end());
  return vs;
}

std::vector<Vertex> canonical_cycle(std::vector<Vertex> cycle) {
  if (cycle.size() < 2) return cycle;
  auto min_it = std::min_element(cycle.begin(), cycle.end());
  std::rotate(cycle.begin(), min_it, cycle.end());
  if (cycle.size() > 2 && cycle.back() < cycle[1]) std::reverse(cycle.begin() + 1, cycle.end());
  return cycle;
}

EdgeLink check_link(const Triangulation& host, std::vector<std::vector<Vertex>> cycles) {
  std::set<Vertex> used;
  for (std::size_t c = 0; c < cycles.size(); ++c) {
    const auto& cyc = cycles[c];
    const std::string where = "component " + std::to_string(c);
    if (cyc.size() < 3) throw Error(where + ": a cycle needs at least 3 vertices, got " + std::to_string(cyc.size()));
    std::set<Vertex> own;
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      Vertex v = cyc[i];
      if (!own.insert(v).second)
        throw Error(where + ", position " + std::to_string(i) + ": repeated vertex " + std::to_string(v));
      if (used.count(v))
        throw Error(where + ", position " + std::to_string(i) + ": shared vertex " + std::to_string(v) +
                    " with an earlier component");
      Vertex w = cyc[(i + 1) % cyc.size()];
      if (!host.has_edge({v, w}))
        throw Error(where + ", position " + std::to_string(i) + ": " + format_simplex(Edge{v, w}) +
                    " is not an edge of the triangulation");
    }
    used.insert(own.begin(), own.end());
  }
  EdgeLink l;
  for (auto& cyc : cycles) l.components.push_back(canonical_cycle(std::move(cyc)));
  std::sort(l.components.begin(), l.components.end());
  return l;
}

std::vector<std::vector<Vertex>> simple_cycles(const Triangulation& t, std::size_t max_length) {
  std::vector<std::vector<Vertex>> out;
  if (max_length < 3) return out;
  std::vector<std::vector<Vertex>> nbrs;
  const auto& vs = t.vertices();
  auto index_of = [&](Vertex v) { return static_cast<std::size_t>(std::lower_bound(vs.begin(), vs.end(), v) - vs.begin()); };
  for (Vertex v : vs) nbrs.push_back(t.neighbors(v));

  std::vector<Vertex> path;
  std::vector<char> on_path(vs.size(), 0);
  // Only paths from the minimal vertex through larger vertices are explored;
  // a closed path is kept when its second vertex is below its last.
  std::function<void(Vertex)> extend = [&](Vertex start) {
    Vertex last = path.back();
    for (Vertex w : nbrs[index_of(last)]) {
      if (w == start && path.size() >= 3 && path[1] < last) out.push_back(path);
      if (w <= start || on_path[index_of(w)] || path.size() >= max_length) continue;
      path.push_back(w);
      on_path[index_of(w)] = 1;
      extend(start);
      on_path[index_of(w)] = 0;
      path.pop_back();
    }
  };
  for (Vertex s : vs) {
    path = {s};
    on_path[index_of(s)] = 1;
    extend(s);
    on_path[index_of(s)] = 0;
  }
  std::sort(out.begin(), out.end());
  return out;
}

void for_each_link(const Triangulation& t, std::size_t max_components, std::size_t max_total_edges,
                   const std::function<bool(const EdgeLink&)>& visit) {
  if (max_components == 0) return;
  const auto cycles = simple_cycles(t, max_total_edges);
  // fits[r]: indices of cycles with at most r edges, in lexicographic order.
  std::vector<std::vector<std::size_t>> fits(max_total_edges + 1);
  for (std::size_t i = 0; i < cycles.size(); ++i)
    for (std::size_t r = cycles[i].size(); r <= max_total_edges; ++r) fits[r].push_back(i);
  const auto& vs = t.vertices();
  auto slot = [&](Vertex v) { return static_cast<std::size_t>(std::lower_bound(vs.begin(), vs.end(), v) - vs.begin()); };
  std::vector<char> used(vs.size(), 0);
  EdgeLink current;
  bool stop = false;
  std::function<void(std::size_t)> grow = [&](std::size_t edges) {
    const auto& pool = fits[max_total_edges - edges];
    auto it = pool.begin();
    if (!current.components.empty()) {
      Vertex after = current.components.back().front();
      it = std::upper_bound(pool.begin(), pool.end(), after,
                            [&](Vertex v, std::size_t i) { return v < cycles[i].front(); });
    }
    for (; it != pool.end() && !stop; ++it) {
      const auto& c = cycles[*it];
      if (std::any_of(c.begin(), c.end(), [&](Vertex v) { return used[slot(v)] != 0; })) continue;
      current.components.push_back(c);
      for (Vertex v : c) used[slot(v)] = 1;
      if (!visit(current)) stop = true;
      const std::size_t total = edges + c.size();
      if (!stop && current.components.size() < max_components && total + 3 <= max_total_edges) grow(total);
      for (Vertex v : c) used[slot(v)] = 0;
      current.components.pop_back();
    }
  };
  if (max_total_edges >= 3) grow(0);
}

std::vector<EdgeLink> enumerate_links(const Triangulation& t, std::size_t max_components,
                                      std::size_t max_total_edges) {
  std::vector<EdgeLink> out;
  for_each_link(t, max_components, max_total_edges, [&](const EdgeLink& l) {
    out.push_back(l);
    return true;
  });
  return out;
}

}  // namespace trilink
