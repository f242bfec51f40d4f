#pragma once

// The support-angle function T of an arc: for a direction θ, T(θ) holds the
// smallest and largest arc parameter touched by the support line L_θ (the line
// of direction θ with the arc on its closed left side). T is a step function:
// one step per hull corner at the corner's parameter, and a two-valued jump
// wherever a hull edge lies on L_θ.

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "arcsupport/arc.hpp"
#include "arcsupport/hull.hpp"

namespace arcsupport {

/// One or two arc parameters; lo == hi for a singleton.
struct TouchSet {
  double lo = 0.0;
  double hi = 0.0;

  std::size_t size() const noexcept { return lo == hi ? 1 : 2; }
  Interval filled() const noexcept { return {lo, hi}; }
  friend bool operator==(TouchSet, TouchSet) noexcept = default;
};

struct ProfileStep {
  Interval angles;       // angles.lo canonical, angles.hi = lo + width
  double level = 0.0;    // corner parameter
  std::size_t corner = 0;

  double width() const noexcept { return angles.length(); }
};

/// Boundary between steps[before] and steps[after]; span holds both levels.
struct Jump {
  double angle = 0.0;  // canonical
  Interval span;
  std::size_t before = 0;
  std::size_t after = 0;
};

class SupportProfile {
 public:
  std::span<const ProfileStep> steps() const noexcept { return steps_; }
  std::span<const Jump> jumps() const noexcept { return jumps_; }
  /// Exterior angle at the smallest-parameter corner (width of the minimum set).
  double delta_1() const noexcept { return steps_[min_step_].width(); }
  /// Exterior angle at the largest-parameter corner (width of the maximum set).
  double delta_n() const noexcept { return steps_[apex_step_].width(); }
  std::size_t min_step() const noexcept { return min_step_; }
  std::size_t apex_step() const noexcept { return apex_step_; }
  const Tolerances& tolerances() const noexcept { return tol_; }
  /// Parameter resolution: eps_touch * diagonal of the source arc.
  double param_slack() const noexcept { return param_slack_; }

  /// Levels read counterclockwise starting at min_step.
  std::vector<double> levels_from_min() const;

 private:
  friend SupportProfile build_profile(const Hull& hull, const PolygonalArc& arc);

  std::vector<ProfileStep> steps_;
  std::vector<Jump> jumps_;
  std::size_t min_step_ = 0;
  std::size_t apex_step_ = 0;
  Tolerances tol_;
  double param_slack_ = 0.0;
};

/// Steps from the hull's corner steps, one jump per shared step boundary.
/// `hull` must have its steps filled (corner_steps).
SupportProfile build_profile(const Hull& hull, const PolygonalArc& arc);
/// build_hull followed by build_profile.
SupportProfile build_profile(const PolygonalArc& arc);

/// T(θ). Angles within eps_angle of a jump belong to the jump.
TouchSet eval_T(const SupportProfile& profile, double theta);
inline TouchSet eval_T(const SupportProfile& profile, Angle theta) { return eval_T(profile, theta.radians()); }

/// The filled function: [min T(θ), max T(θ)].
Interval eval_filled(const SupportProfile& profile, double theta);

/// Index of the jump within eps_angle of theta, if any.
std::optional<std::size_t> jump_at(const SupportProfile& profile, double theta);

/// T^{-1}(s): the step of the corner whose parameter is s, or nothing.
std::optional<Interval> cross_section(const SupportProfile& profile, double s);

/// L_θ as a direction plus a point on it.
struct DirectedLine {
  Angle theta;
  Point2 anchor;
};

/// Signed distance of p to the left of the line (positive = arc side).
double left_offset(const DirectedLine& line, Point2 p) noexcept;

/// Smallest left_offset over all arc vertices.
double min_left_offset(const DirectedLine& line, const PolygonalArc& arc) noexcept;

/// True when every arc vertex is on the closed left side within touch slack.
bool supports(const DirectedLine& line, const PolygonalArc& arc) noexcept;

/// L_θ anchored at γ(min T(θ)).
DirectedLine support_line(const SupportProfile& profile, const PolygonalArc& arc, double theta);

// --- continuous prototype ---------------------------------------------------

struct Breakpoint {
  double x = 0.0;
  double y = 0.0;
};

/// For a piecewise-linear f on [0, 2π] with f(0) = f(2π) = 0, rising strictly
/// to a single interior peak of value 1 and falling strictly back, returns the
/// unique x with f(x) = f(x + delta). Solves (falling inverse) - (rising
/// inverse) = delta for the level by bisection.
/// Throws MalformedFunction or InvalidDelta (delta outside (0, 2π)).
double unique_crossing_continuous(std::span<const Breakpoint> f, double delta);

/// Evaluates the piecewise-linear function (x clamped to its domain).
double evaluate_piecewise(std::span<const Breakpoint> f, double x) noexcept;

}  // namespace arcsupport
