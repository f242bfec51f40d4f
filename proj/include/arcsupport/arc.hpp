#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "arcsupport/geometry.hpp"
#include "arcsupport/simd/touch_kernels.hpp"

namespace arcsupport {

/// A validated simple polygonal arc parametrized by arc length.
///
/// Invariants established by build_arc:
///  - at least two vertices, consecutive vertices farther apart than
///    eps_touch * diagonal;
///  - non-adjacent segments are disjoint, adjacent segments share only their
///    common vertex (collinear continuation is allowed, back-tracking is not);
///  - params()[0] == 0, params() strictly increasing, params().back() == length().
class PolygonalArc {
 public:
  std::span<const Point2> vertices() const noexcept { return vertices_; }
  std::span<const double> params() const noexcept { return params_; }
  std::size_t size() const noexcept { return vertices_.size(); }
  double length() const noexcept { return params_.back(); }
  /// Diagonal of the axis-aligned bounding box; the scale for all tolerances.
  double diagonal() const noexcept { return diagonal_; }
  const Tolerances& tolerances() const noexcept { return tol_; }

  /// eps_touch * diagonal: distance below which a point is "on" a line.
  double touch_slack() const noexcept { return tol_.eps_touch * diagonal_; }

  /// Structure-of-arrays copy of the vertices for the projection kernels.
  simd::VertexLanes lanes() const noexcept { return {xs_, ys_, params_}; }

 private:
  friend PolygonalArc build_arc(std::span<const Point2> vertices, const Tolerances& tol);

  std::vector<Point2> vertices_;
  std::vector<double> params_;
  std::vector<double> xs_;
  std::vector<double> ys_;
  double diagonal_ = 0.0;
  Tolerances tol_;
};

/// Validates a vertex chain given in traversal order.
/// Throws TooFewVertices, DuplicateVertex, SelfIntersecting or
/// NonFiniteCoordinate.
PolygonalArc build_arc(std::span<const Point2> vertices, const Tolerances& tol = {});

/// Point at arc-length parameter s. Throws ParamOutOfRange outside
/// [0, length] (values within eps_touch * length of an end are clamped).
Point2 point_at(const PolygonalArc& arc, double s);

/// Similarity-scaled copy of length 1 (scaled about the origin).
PolygonalArc scale_to_unit(const PolygonalArc& arc);

/// Copy rotated counterclockwise by phi about the origin.
PolygonalArc rotate(const PolygonalArc& arc, double phi);

/// Closed-segment intersection test using orient at the given scale.
bool segments_intersect(Point2 a, Point2 b, Point2 c, Point2 d, const Tolerances& tol, double scale) noexcept;

}  // namespace arcsupport
