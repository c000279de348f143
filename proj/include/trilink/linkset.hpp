#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <vector>

#include "trilink/complex.hpp"

namespace trilink {

/// A link in the 1-skeleton: pairwise vertex-disjoint simple vertex cycles.
///
/// Canonical form: each cycle starts at its minimum vertex with the smaller
/// neighbor second, and components are sorted by starting vertex. Validity is
/// relative to the host triangulation passed to check_link.
struct EdgeLink {
  std::vector<std::vector<Vertex>> components;

  /// k, the number of edges forming the link.
  std::size_t edge_count() const;
  std::vector<Vertex> vertices() const;

  friend bool operator==(const EdgeLink&, const EdgeLink&) = default;
  friend auto operator<=>(const EdgeLink&, const EdgeLink&) = default;
};

/// Rotation/reflection to canonical form; no validation.
std::vector<Vertex> canonical_cycle(std::vector<Vertex> cycle);

/// Validates raw cycles against `host` and returns the canonical link.
/// Throws Error naming the offending component and position.
EdgeLink check_link(const Triangulation& host, std::vector<std::vector<Vertex>> cycles);

/// Every canonical simple cycle with at most `max_length` edges, in
/// lexicographic order.
std::vector<std::vector<Vertex>> simple_cycles(const Triangulation& t, std::size_t max_length);

/// Streams every canonical link with at most `max_components` components and
/// at most `max_total_edges` edges, once each, in lexicographic order. The
/// visitor returns false to stop early.
void for_each_link(const Triangulation& t, std::size_t max_components, std::size_t max_total_edges,
                   const std::function<bool(const EdgeLink&)>& visit);

std::vector<EdgeLink> enumerate_links(const Triangulation& t, std::size_t max_components,
                                      std::size_t max_total_edges);

}  // namespace trilink
