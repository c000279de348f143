#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "trilink/complex.hpp"

namespace trilink {

/// An order of the tetrahedra, as indices into t.tetrahedra() or as the
/// tetrahedra themselves.
using ShellingOrder = std::vector<Tet>;

struct ShellingCheck {
  bool ok = false;
  std::size_t failing_index = 0;  // 1-based position of the first bad tetrahedron
  std::string message;
};

/// Facet-intersection criterion: for 2 <= k < n the tetrahedron σ_k meets the
/// union of its predecessors in the complex generated by 1..3 of its
/// triangles (no further lower-dimensional contact); σ_n meets it in its whole
/// boundary. For closed pseudomanifolds this is the closed-ball condition on
/// every initial union.
ShellingCheck verify_shelling(const Triangulation& t, const ShellingOrder& order);

enum class ShellingStatus { found, none, budget_exhausted };

std::string to_string(ShellingStatus s);

struct ShellingSearch {
  ShellingStatus status = ShellingStatus::none;
  std::optional<ShellingOrder> order;
  std::uint64_t nodes = 0;
};

inline constexpr std::uint64_t kDefaultShellingBudget = 10'000'000;

/// Backtracking search; each placement of a tetrahedron costs one node.
/// Candidates are tried by (shared triangles, tetrahedron) descending.
ShellingSearch find_shelling(const Triangulation& t, std::uint64_t budget = kDefaultShellingBudget);

}  // namespace trilink
