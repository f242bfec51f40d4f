#pragma once

// Plane primitives, the tolerance policy, wrap-safe angle arithmetic and
// interval subtraction. Everything here is a pure value operation.

#include <numbers>

#include "arcsupport/error.hpp"

namespace arcsupport {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

struct Point2 {
  double x = 0.0;
  double y = 0.0;

  friend constexpr Point2 operator+(Point2 a, Point2 b) noexcept { return {a.x + b.x, a.y + b.y}; }
  friend constexpr Point2 operator-(Point2 a, Point2 b) noexcept { return {a.x - b.x, a.y - b.y}; }
  friend constexpr Point2 operator*(double k, Point2 a) noexcept { return {k * a.x, k * a.y}; }
  friend constexpr bool operator==(Point2 a, Point2 b) noexcept = default;
};

constexpr double dot(Point2 a, Point2 b) noexcept { return a.x * b.x + a.y * b.y; }
constexpr double cross(Point2 a, Point2 b) noexcept { return a.x * b.y - a.y * b.x; }
double norm(Point2 v) noexcept;
double distance(Point2 a, Point2 b) noexcept;
bool is_finite(Point2 p) noexcept;

/// An angle canonicalized to [0, 2π) on construction.
class Angle {
 public:
  constexpr Angle() noexcept = default;
  explicit Angle(double radians) noexcept;

  double radians() const noexcept { return radians_; }
  /// Unit direction (cos θ, sin θ).
  Point2 direction() const noexcept;

  friend bool operator==(Angle, Angle) noexcept = default;

 private:
  double radians_ = 0.0;
};

/// Maps any finite value into [0, 2π).
double canonical_angle(double radians) noexcept;

/// Closed real interval; lo == hi is a legal degenerate interval.
struct Interval {
  double lo = 0.0;
  double hi = 0.0;

  constexpr double length() const noexcept { return hi - lo; }
  constexpr bool degenerate() const noexcept { return lo == hi; }
  constexpr bool contains(double v, double slack = 0.0) const noexcept {
    return v >= lo - slack && v <= hi + slack;
  }
  friend constexpr bool operator==(Interval, Interval) noexcept = default;
};

/// Scale-relative tolerances. eps_orient scales with the squared bounding-box
/// diagonal, eps_touch with the diagonal, eps_angle is absolute radians.
struct Tolerances {
  double eps_orient = 1e-12;
  double eps_angle = 1e-9;
  double eps_touch = 1e-9;

  /// Throws std::invalid_argument unless every field is strictly positive.
  void validate() const;
};

/// Sign of the turn p -> q -> r: +1 left, -1 right, 0 collinear within
/// eps_orient * scale^2. The one-scale overload uses the diagonal of the
/// bounding box of the three points.
int orient(Point2 p, Point2 q, Point2 r, const Tolerances& tol) noexcept;
int orient(Point2 p, Point2 q, Point2 r, const Tolerances& tol, double scale) noexcept;

/// Canonical direction angle of a non-zero vector. Throws ZeroVector.
Angle angle_of(Point2 v);

/// Counterclockwise distance from a to b, in [0, 2π).
double ccw_gap(Angle a, Angle b) noexcept;
double ccw_gap(double a, double b) noexcept;

/// Shortest circular distance between two angles, in [0, π].
double circular_distance(double a, double b) noexcept;

/// {i - j | i in I, j in J}.
constexpr Interval interval_sub(Interval i, Interval j) noexcept { return {i.lo - j.hi, i.hi - j.lo}; }

}  // namespace arcsupport
