#pragma once

#include <cstddef>
#include <vector>

#include "arcsupport/arc.hpp"

namespace arcsupport {

/// A strict corner of the arc's convex hull.
///
/// `step` is the closed angular interval of support directions touching this
/// corner: step.lo is the canonical direction of the incoming hull edge and
/// step.hi = step.lo + exterior_angle (so step.hi may exceed 2π).
struct HullCorner {
  Point2 point;
  double param = 0.0;        // arc-length parameter of the corner
  std::size_t vertex = 0;    // index into the arc's vertex list
  Interval step;             // filled by corner_steps
  double exterior_angle = 0.0;
};

/// Counterclockwise hull cycle, starting at the corner with the smallest
/// arc parameter.
struct Hull {
  std::vector<HullCorner> corners;
};

/// Melkman's online hull of a simple polyline. Vertices collinear with a hull
/// edge (within eps_orient) are not corners. Throws StraightArc when every
/// vertex is collinear.
Hull melkman_hull(const PolygonalArc& arc, const Tolerances& tol);
inline Hull melkman_hull(const PolygonalArc& arc) { return melkman_hull(arc, arc.tolerances()); }

/// Fills step and exterior_angle from the counterclockwise neighbours.
Hull corner_steps(Hull hull);

/// melkman_hull followed by corner_steps.
Hull build_hull(const PolygonalArc& arc);

}  // namespace arcsupport
