#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "trilink/complex.hpp"
#include "trilink/linkset.hpp"

namespace trilink {

/// Vertex-splitting data for an expansion at `vertex`.
///
/// The link of `vertex` (a 2-sphere) is cut along `boundary_cycle` into two
/// disks. After the expansion `vertex` keeps disk_a, the new vertex
/// `new_label` takes disk_b, and the new edge {vertex, new_label} has
/// boundary_cycle as its link.
struct ExpansionSpec {
  Vertex vertex = 0;
  std::vector<Triangle> disk_a;
  std::vector<Triangle> disk_b;
  std::vector<Vertex> boundary_cycle;
  Vertex new_label = 0;

  friend bool operator==(const ExpansionSpec&, const ExpansionSpec&) = default;
};

enum class MoveKind { contract, expand, pachner_14, pachner_23, pachner_32, pachner_41 };

std::string to_string(MoveKind k);
MoveKind parse_move_kind(const std::string& s);

/// Replayable description of one move.
///
/// `removed`/`added` are the exact tetrahedra swapped, so the inverse is
/// always "remove added, add removed". For contractions `edge` is (kept,
/// removed) and `expansion` is the spec that undoes it; for expansions and
/// stellar subdivisions `expansion` is the spec that was applied.
struct MoveRecord {
  MoveKind kind = MoveKind::expand;
  std::vector<Vertex> location;
  std::optional<Edge> edge;
  std::optional<ExpansionSpec> expansion;
  std::vector<Tet> removed;
  std::vector<Tet> added;
  std::map<Vertex, Vertex> vertex_map;  // labels that disappear -> label they merge into

  friend bool operator==(const MoveRecord&, const MoveRecord&) = default;
};

using MoveResult = std::pair<Triangulation, MoveRecord>;

/// Undoes any record: the result equals the move's input bit for bit.
Triangulation apply_inverse(const Triangulation& t, const MoveRecord& rec);

/// Simplex of (lk(a) ∩ lk(b)) \ lk(e), if any; nullopt means the link
/// condition holds.
std::optional<std::vector<Vertex>> link_condition_witness(const Triangulation& t, Edge e);

/// Contracts e = (kept, removed): deletes star(e) and identifies `removed`
/// with `kept`. Throws Error with a witness when the link condition fails.
MoveResult contract_edge(const Triangulation& t, Edge e);

/// Checks the spec against `t`; empty string when it is well-formed.
std::string check_expansion_spec(const Triangulation& t, const ExpansionSpec& spec);

/// Inverse of contract_edge. Throws Error with Euler diagnostics when the
/// spec is malformed.
MoveResult expand(const Triangulation& t, const ExpansionSpec& spec);

/// Builds the spec splitting link(v) along a given cycle in that link; disk_a
/// is the side containing `side_a_triangle`.
ExpansionSpec spec_from_cycle(const Triangulation& t, Vertex v, const std::vector<Vertex>& cycle,
                              const Triangle& side_a_triangle, Vertex new_label);

/// Stellar subdivision of an edge, triangle or tetrahedron with a fresh vertex.
/// The record carries the equivalent ExpansionSpec (checked by replay).
MoveResult stellar_subdivide(const Triangulation& t, const std::vector<Vertex>& simplex);

/// Bistellar flips. Each throws Error when the flip is not applicable.
MoveResult pachner_14(const Triangulation& t, const Tet& tet);
MoveResult pachner_23(const Triangulation& t, const Triangle& tri);
MoveResult pachner_32(const Triangulation& t, const Edge& edge);
MoveResult pachner_41(const Triangulation& t, Vertex v);

struct Flip {
  MoveKind kind;
  std::vector<Vertex> location;
  friend bool operator==(const Flip&, const Flip&) = default;
};

/// All applicable flips in a fixed order: 1-4 per tetrahedron, 2-3 per
/// triangle, 3-2 per edge, 4-1 per vertex, each in lexicographic order.
std::vector<Flip> applicable_flips(const Triangulation& t);
MoveResult apply_flip(const Triangulation& t, const Flip& f);

/// Carries a link through an expansion (at most one extra edge) or back
/// through the matching contraction.
EdgeLink transport_link(const EdgeLink& l, const MoveRecord& rec);

}  // namespace trilink
