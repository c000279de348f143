#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "trilink/linkset.hpp"
#include "trilink/rational.hpp"
#include "trilink/realize.hpp"

namespace trilink {

/// One transversal double point of the projected link.
///
/// Segments are numbered globally from 1: components in canonical order,
/// segment j of a component runs from its j-th to its (j+1)-th vertex.
struct Crossing {
  std::size_t id = 0;  // 1-based, ordered by (first segment, second segment)
  std::size_t over_segment = 0, under_segment = 0;
  std::size_t over_component = 0, under_component = 0;
  Vec2 point;
  Rational over_param, under_param;  // position in (0, 1) along each segment
  int sign = 0;
};

/// A link diagram obtained by orthogonal projection along `direction`.
///
/// Over/under: the point with the larger depth p·direction is over (the
/// viewer sits at +direction). Sign: +1 when the over direction rotated by
/// +90° in the projection plane points along the under direction.
/// PD arcs are numbered from 1 component by component; the arc leaving the
/// i-th crossing passage of a component gets the next number. Each PD entry is
/// X[under in, ·, under out, ·] read counterclockwise. Gauss codes list +id
/// for an over passage and −id for an under passage.
struct Diagram {
  Vec3 direction;
  std::array<Vec3, 2> frame;  // projection plane basis (u, w), u × w ∥ direction
  std::vector<std::vector<Vertex>> components;
  std::vector<std::vector<Vec2>> strands;
  std::vector<Crossing> crossings;
  std::vector<std::array<std::size_t, 4>> pd;  // sorted lexicographically
  std::vector<std::vector<long>> gauss;

  std::size_t segment_count() const;
};

/// (1, t, t²)
Vec3 direction_candidate(long t);

/// Projection plane basis for a direction: u = (−d_y, d_x, 0) (or e_x when
/// that vanishes) and w = d × u.
std::array<Vec3, 2> projection_frame(const Vec3& d);

/// Empty when `d` is generic for the link: no segment parallel to d,
/// non-adjacent segments meet at most in one interior transversal point with
/// distinct depths, adjacent segments meet only at the common endpoint, and
/// no point of the plane lies on three segments. Otherwise the first reason.
std::string genericity_failure(const Realization3& r, const EdgeLink& l, const Vec3& d);

/// First candidate direction_candidate(t), t = 1, 2, ..., that is generic.
/// Throws Error after `max_candidates` rejections.
Vec3 generic_direction(const Realization3& r, const EdgeLink& l, long max_candidates = 10000);

/// The first `count` generic candidates in order.
std::vector<Vec3> generic_directions(const Realization3& r, const EdgeLink& l, std::size_t count,
                                     long max_candidates = 10000);

/// Throws Error if `d` is not generic.
Diagram project(const Realization3& r, const EdgeLink& l, const Vec3& d);

inline std::size_t crossing_count(const Diagram& dg) { return dg.crossings.size(); }

/// Symmetric matrix: off-diagonal linking numbers, diagonal writhes.
std::vector<std::vector<long>> linking_matrix(const Diagram& dg);

/// One "X[a,b,c,d]" line per crossing, sorted.
std::string pd_text(const Diagram& dg);
std::string gauss_text(const Diagram& dg);

/// Deterministic SVG; floating point is used only to print coordinates.
std::string render_svg(const Diagram& dg);

}  // namespace trilink
