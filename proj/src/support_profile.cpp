#include "arcsupport/support_profile.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace arcsupport {

SupportProfile build_profile(const Hull& hull, const PolygonalArc& arc) {
  const auto& cs = hull.corners;
  if (cs.size() < 3) throw Error(ErrorKind::StraightArc, "profile needs a hull with at least 3 corners");

  SupportProfile p;
  p.tol_ = arc.tolerances();
  p.param_slack_ = arc.touch_slack();
  const std::size_t n = cs.size();
  p.steps_.reserve(n);
  for (std::size_t j = 0; j < n; ++j) p.steps_.push_back({cs[j].step, cs[j].param, j});

  p.jumps_.reserve(n);
  for (std::size_t j = 0; j < n; ++j) {
    const std::size_t next = (j + 1) % n;
    const double a = p.steps_[j].level;
    const double b = p.steps_[next].level;
    p.jumps_.push_back({p.steps_[next].angles.lo, {std::min(a, b), std::max(a, b)}, j, next});
  }

  const auto by_level = [](const ProfileStep& l, const ProfileStep& r) { return l.level < r.level; };
  p.min_step_ = static_cast<std::size_t>(std::min_element(p.steps_.begin(), p.steps_.end(), by_level) - p.steps_.begin());
  p.apex_step_ = static_cast<std::size_t>(std::max_element(p.steps_.begin(), p.steps_.end(), by_level) - p.steps_.begin());
  return p;
}

SupportProfile build_profile(const PolygonalArc& arc) { return build_profile(build_hull(arc), arc); }

std::vector<double> SupportProfile::levels_from_min() const {
  std::vector<double> out;
  out.reserve(steps_.size());
  for (std::size_t k = 0; k < steps_.size(); ++k) out.push_back(steps_[(min_step_ + k) % steps_.size()].level);
  return out;
}

std::optional<std::size_t> jump_at(const SupportProfile& profile, double theta) {
  const auto jumps = profile.jumps();
  std::optional<std::size_t> best;
  double best_d = profile.tolerances().eps_angle;
  for (std::size_t k = 0; k < jumps.size(); ++k) {
    const double d = circular_distance(jumps[k].angle, theta);
    if (d <= best_d) {
      best_d = d;
      best = k;
    }
  }
  return best;
}

TouchSet eval_T(const SupportProfile& profile, double theta) {
  theta = canonical_angle(theta);
  if (const auto j = jump_at(profile, theta)) {
    const Interval span = profile.jumps()[*j].span;
    return {span.lo, span.hi};
  }
  const auto steps = profile.steps();
  std::size_t nearest = 0;
  double nearest_d = std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < steps.size(); ++k) {
    const double into = ccw_gap(steps[k].angles.lo, theta);
    if (into < steps[k].width()) return {steps[k].level, steps[k].level};
    const double d = std::min(into - steps[k].width(), kTwoPi - into);
    if (d < nearest_d) {
      nearest_d = d;
      nearest = k;
    }
  }
  // Rounding can leave theta in a sliver between adjacent step ends.
  return {steps[nearest].level, steps[nearest].level};
}

Interval eval_filled(const SupportProfile& profile, double theta) { return eval_T(profile, theta).filled(); }

std::optional<Interval> cross_section(const SupportProfile& profile, double s) {
  for (const ProfileStep& step : profile.steps()) {
    if (std::abs(step.level - s) <= profile.param_slack()) return step.angles;
  }
  return std::nullopt;
}

double left_offset(const DirectedLine& line, Point2 p) noexcept { return cross(line.theta.direction(), p - line.anchor); }

double min_left_offset(const DirectedLine& line, const PolygonalArc& arc) noexcept {
  // left_offset(p) = a.out - p.out with out = (sin θ, -cos θ), the outward normal.
  const Point2 dir = line.theta.direction();
  const Point2 out{dir.y, -dir.x};
  return dot(line.anchor, out) - simd::max_projection(arc.lanes(), out.x, out.y);
}

bool supports(const DirectedLine& line, const PolygonalArc& arc) noexcept {
  return min_left_offset(line, arc) >= -arc.touch_slack();
}

DirectedLine support_line(const SupportProfile& profile, const PolygonalArc& arc, double theta) {
  const TouchSet t = eval_T(profile, theta);
  return {Angle(theta), point_at(arc, t.lo)};
}

// --- continuous prototype ---------------------------------------------------

namespace {

// Inverse of the monotone piece f[first..last] at level y.
double inverse_on(std::span<const Breakpoint> f, std::size_t first, std::size_t last, double y) {
  for (std::size_t i = first; i < last; ++i) {
    const double y0 = f[i].y, y1 = f[i + 1].y;
    if ((y >= std::min(y0, y1)) && (y <= std::max(y0, y1))) {
      if (y0 == y1) return f[i].x;
      return f[i].x + (y - y0) / (y1 - y0) * (f[i + 1].x - f[i].x);
    }
  }
  return f[first].x;
}

}  // namespace

double evaluate_piecewise(std::span<const Breakpoint> f, double x) noexcept {
  if (x <= f.front().x) return f.front().y;
  if (x >= f.back().x) return f.back().y;
  const auto it = std::lower_bound(f.begin(), f.end(), x, [](const Breakpoint& b, double v) { return b.x < v; });
  const std::size_t i = static_cast<std::size_t>(it - f.begin());
  const Breakpoint a = f[i - 1], b = f[i];
  return a.y + (x - a.x) / (b.x - a.x) * (b.y - a.y);
}

double unique_crossing_continuous(std::span<const Breakpoint> f, double delta) {
  constexpr double kEps = 1e-12;
  if (!(delta > 0.0 && delta < kTwoPi)) throw Error(ErrorKind::InvalidDelta, "delta must lie in (0, 2π)");
  if (f.size() < 3) throw Error(ErrorKind::MalformedFunction, "need at least 3 breakpoints");
  if (std::abs(f.front().x) > kEps || std::abs(f.back().x - kTwoPi) > kEps) {
    throw Error(ErrorKind::MalformedFunction, "domain must be [0, 2π]");
  }
  if (std::abs(f.front().y) > kEps || std::abs(f.back().y) > kEps) {
    throw Error(ErrorKind::MalformedFunction, "f(0) and f(2π) must be 0");
  }
  std::size_t peak = 0;
  for (std::size_t i = 1; i < f.size(); ++i) {
    if (!(f[i].x > f[i - 1].x)) throw Error(ErrorKind::MalformedFunction, "breakpoints must be strictly increasing in x");
    if (f[i].y > f[peak].y) peak = i;
  }
  if (peak == 0 || peak + 1 == f.size() || std::abs(f[peak].y - 1.0) > kEps) {
    throw Error(ErrorKind::MalformedFunction, "peak value 1 must be attained in the interior");
  }
  for (std::size_t i = 1; i <= peak; ++i) {
    if (!(f[i].y > f[i - 1].y)) throw Error(ErrorKind::MalformedFunction, "f must rise strictly up to the peak");
  }
  for (std::size_t i = peak + 1; i < f.size(); ++i) {
    if (!(f[i].y < f[i - 1].y)) throw Error(ErrorKind::MalformedFunction, "f must fall strictly after the peak");
  }

  const std::size_t last = f.size() - 1;
  // D(y) falls strictly from 2π at y = 0 to 0 at y = 1.
  auto gap_at = [&](double y) { return inverse_on(f, peak, last, y) - inverse_on(f, 0, peak, y); };
  double lo = 0.0, hi = 1.0;
  for (int iter = 0; iter < 200; ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (gap_at(mid) > delta) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return inverse_on(f, 0, peak, 0.5 * (lo + hi));
}

}  // namespace arcsupport
