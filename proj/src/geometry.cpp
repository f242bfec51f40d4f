#include "arcsupport/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace arcsupport {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::ZeroVector: return "ZeroVector";
    case ErrorKind::NonFiniteCoordinate: return "NonFiniteCoordinate";
    case ErrorKind::TooFewVertices: return "TooFewVertices";
    case ErrorKind::DuplicateVertex: return "DuplicateVertex";
    case ErrorKind::SelfIntersecting: return "SelfIntersecting";
    case ErrorKind::ParamOutOfRange: return "ParamOutOfRange";
    case ErrorKind::StraightArc: return "StraightArc";
    case ErrorKind::MalformedFunction: return "MalformedFunction";
    case ErrorKind::InvalidDelta: return "InvalidDelta";
    case ErrorKind::NotFound: return "NotFound";
    case ErrorKind::GenerationExhausted: return "GenerationExhausted";
    case ErrorKind::MalformedInput: return "MalformedInput";
  }
  return "Unknown";
}

double norm(Point2 v) noexcept { return std::hypot(v.x, v.y); }

double distance(Point2 a, Point2 b) noexcept { return norm(b - a); }

bool is_finite(Point2 p) noexcept { return std::isfinite(p.x) && std::isfinite(p.y); }

double canonical_angle(double radians) noexcept {
  double r = std::fmod(radians, kTwoPi);
  if (r < 0.0) r += kTwoPi;
  // fmod of a tiny negative value plus 2π rounds up to 2π itself.
  if (r >= kTwoPi) r = 0.0;
  return r;
}

Angle::Angle(double radians) noexcept : radians_(canonical_angle(radians)) {}

Point2 Angle::direction() const noexcept { return {std::cos(radians_), std::sin(radians_)}; }

void Tolerances::validate() const {
  if (!(eps_orient > 0.0) || !(eps_angle > 0.0) || !(eps_touch > 0.0)) {
    throw std::invalid_argument("tolerances must be strictly positive");
  }
}

int orient(Point2 p, Point2 q, Point2 r, const Tolerances& tol, double scale) noexcept {
  const double c = cross(q - p, r - p);
  const double threshold = tol.eps_orient * scale * scale;
  if (c > threshold) return 1;
  if (c < -threshold) return -1;
  return 0;
}

int orient(Point2 p, Point2 q, Point2 r, const Tolerances& tol) noexcept {
  const double w = std::max({p.x, q.x, r.x}) - std::min({p.x, q.x, r.x});
  const double h = std::max({p.y, q.y, r.y}) - std::min({p.y, q.y, r.y});
  return orient(p, q, r, tol, std::hypot(w, h));
}

Angle angle_of(Point2 v) {
  if (v.x == 0.0 && v.y == 0.0) throw Error(ErrorKind::ZeroVector, "direction of the zero vector");
  return Angle(std::atan2(v.y, v.x));
}

double ccw_gap(double a, double b) noexcept { return canonical_angle(b - a); }

double ccw_gap(Angle a, Angle b) noexcept { return ccw_gap(a.radians(), b.radians()); }

double circular_distance(double a, double b) noexcept {
  const double g = ccw_gap(a, b);
  return std::min(g, kTwoPi - g);
}

}  // namespace arcsupport
