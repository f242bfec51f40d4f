#include "arcsupport/arc.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace arcsupport {
namespace {

double bbox_diagonal(std::span<const Point2> pts) noexcept {
  double min_x = pts.front().x, max_x = pts.front().x;
  double min_y = pts.front().y, max_y = pts.front().y;
  for (const Point2& p : pts) {
    min_x = std::min(min_x, p.x);
    max_x = std::max(max_x, p.x);
    min_y = std::min(min_y, p.y);
    max_y = std::max(max_y, p.y);
  }
  return std::hypot(max_x - min_x, max_y - min_y);
}

bool within_box(Point2 p, Point2 a, Point2 b, double slack) noexcept {
  return p.x >= std::min(a.x, b.x) - slack && p.x <= std::max(a.x, b.x) + slack &&
         p.y >= std::min(a.y, b.y) - slack && p.y <= std::max(a.y, b.y) + slack;
}

}  // namespace

bool segments_intersect(Point2 a, Point2 b, Point2 c, Point2 d, const Tolerances& tol, double scale) noexcept {
  const int o1 = orient(a, b, c, tol, scale);
  const int o2 = orient(a, b, d, tol, scale);
  const int o3 = orient(c, d, a, tol, scale);
  const int o4 = orient(c, d, b, tol, scale);
  if (o1 * o2 < 0 && o3 * o4 < 0) return true;
  const double slack = tol.eps_touch * scale;
  if (o1 == 0 && within_box(c, a, b, slack)) return true;
  if (o2 == 0 && within_box(d, a, b, slack)) return true;
  if (o3 == 0 && within_box(a, c, d, slack)) return true;
  if (o4 == 0 && within_box(b, c, d, slack)) return true;
  return false;
}

PolygonalArc build_arc(std::span<const Point2> vertices, const Tolerances& tol) {
  tol.validate();
  if (vertices.size() < 2) {
    throw Error(ErrorKind::TooFewVertices, "an arc needs at least 2 vertices, got " + std::to_string(vertices.size()));
  }
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (!is_finite(vertices[i])) {
      throw Error(ErrorKind::NonFiniteCoordinate, "vertex " + std::to_string(i) + " is not finite");
    }
  }
  const double diag = bbox_diagonal(vertices);
  if (!(diag > 0.0)) throw Error(ErrorKind::TooFewVertices, "all vertices coincide");

  const double slack = tol.eps_touch * diag;
  const std::size_t n = vertices.size();
  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (distance(vertices[i], vertices[i + 1]) <= slack) {
      throw Error(ErrorKind::DuplicateVertex, "vertices " + std::to_string(i) + " and " + std::to_string(i + 1) + " coincide");
    }
  }

  // Adjacent segments may only meet at their shared vertex.
  for (std::size_t i = 0; i + 2 < n; ++i) {
    const Point2 a = vertices[i], b = vertices[i + 1], c = vertices[i + 2];
    if (orient(a, b, c, tol, diag) == 0 && dot(b - a, c - b) < 0.0) {
      throw Error(ErrorKind::SelfIntersecting, "arc doubles back at vertex " + std::to_string(i + 1));
    }
  }
  // O(n^2) pairwise test of non-adjacent segments.
  for (std::size_t i = 0; i + 1 < n; ++i) {
    for (std::size_t j = i + 2; j + 1 < n; ++j) {
      if (segments_intersect(vertices[i], vertices[i + 1], vertices[j], vertices[j + 1], tol, diag)) {
        throw Error(ErrorKind::SelfIntersecting,
                    "segments " + std::to_string(i) + " and " + std::to_string(j) + " intersect");
      }
    }
  }

  PolygonalArc arc;
  arc.vertices_.assign(vertices.begin(), vertices.end());
  arc.params_.resize(n);
  arc.params_[0] = 0.0;
  for (std::size_t i = 1; i < n; ++i) arc.params_[i] = arc.params_[i - 1] + distance(vertices[i - 1], vertices[i]);
  arc.xs_.resize(n);
  arc.ys_.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    arc.xs_[i] = vertices[i].x;
    arc.ys_[i] = vertices[i].y;
  }
  arc.diagonal_ = diag;
  arc.tol_ = tol;
  return arc;
}

Point2 point_at(const PolygonalArc& arc, double s) {
  const auto params = arc.params();
  const auto verts = arc.vertices();
  const double slack = arc.tolerances().eps_touch * arc.length();
  if (!(s >= -slack && s <= arc.length() + slack)) {
    throw Error(ErrorKind::ParamOutOfRange, "parameter " + std::to_string(s) + " outside [0, " + std::to_string(arc.length()) + "]");
  }
  s = std::clamp(s, 0.0, arc.length());
  // First segment whose end parameter is >= s.
  const auto it = std::lower_bound(params.begin() + 1, params.end(), s);
  const std::size_t seg = static_cast<std::size_t>(std::distance(params.begin(), it)) - 1;
  const double t0 = params[seg];
  const double t1 = params[seg + 1];
  if (s == t1) return verts[seg + 1];
  const double w = (s - t0) / (t1 - t0);
  return verts[seg] + w * (verts[seg + 1] - verts[seg]);
}

PolygonalArc scale_to_unit(const PolygonalArc& arc) {
  const double k = 1.0 / arc.length();
  std::vector<Point2> scaled;
  scaled.reserve(arc.size());
  for (const Point2& p : arc.vertices()) scaled.push_back(k * p);
  return build_arc(scaled, arc.tolerances());
}

PolygonalArc rotate(const PolygonalArc& arc, double phi) {
  const double c = std::cos(phi);
  const double s = std::sin(phi);
  std::vector<Point2> turned;
  turned.reserve(arc.size());
  for (const Point2& p : arc.vertices()) turned.push_back({c * p.x - s * p.y, s * p.x + c * p.y});
  return build_arc(turned, arc.tolerances());
}

}  // namespace arcsupport
