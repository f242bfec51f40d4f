#include "arcsupport/pair_finder.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <string>

namespace arcsupport {

std::string_view to_string(ScanMode mode) noexcept { return mode == ScanMode::mountain ? "mountain" : "valley"; }

namespace {

// The profile unrolled onto [0, 2π] from the start of one step. Levels are
// sign-adjusted so the window always reads as a mountain: rising from index 0
// to `peak`, then falling. The valley scan is the mountain scan of -T
// anchored at the apex.
struct Window {
  double anchor = 0.0;
  std::vector<double> u;      // n + 1 step boundaries, u[0] = 0, u[n] ~ 2π
  std::vector<double> level;  // n signed levels
  std::size_t peak = 0;
  double sign = 1.0;
};

Window make_window(const SupportProfile& profile, ScanMode mode) {
  const auto steps = profile.steps();
  const std::size_t n = steps.size();
  const std::size_t first = mode == ScanMode::mountain ? profile.min_step() : profile.apex_step();
  Window w;
  w.sign = mode == ScanMode::mountain ? 1.0 : -1.0;
  w.anchor = steps[first].angles.lo;
  w.u.resize(n + 1);
  w.level.resize(n);
  w.u[0] = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const ProfileStep& s = steps[(first + i) % n];
    w.u[i + 1] = w.u[i] + s.width();
    w.level[i] = w.sign * s.level;
  }
  w.peak = static_cast<std::size_t>(std::max_element(w.level.begin(), w.level.end()) - w.level.begin());
  return w;
}

// Preimage of level s under the rising branch [0, peak] of the filled
// function. The jump at u[0] contributes only the window's bottom level.
std::optional<Interval> rising_inverse(const Window& w, double s) {
  for (std::size_t k = 0; k <= w.peak; ++k) {
    if (s == w.level[k]) return Interval{w.u[k], w.u[k + 1]};
  }
  for (std::size_t k = 1; k <= w.peak; ++k) {
    if (w.level[k - 1] < s && s < w.level[k]) return Interval{w.u[k], w.u[k]};
  }
  return std::nullopt;
}

// Preimage under the falling branch [peak, n); the jump at u[n] spans from
// the last level down to the bottom.
std::optional<Interval> falling_inverse(const Window& w, double s) {
  const std::size_t n = w.level.size();
  for (std::size_t k = w.peak; k < n; ++k) {
    if (s == w.level[k]) return Interval{w.u[k], w.u[k + 1]};
  }
  for (std::size_t k = w.peak + 1; k < n; ++k) {
    if (w.level[k] < s && s < w.level[k - 1]) return Interval{w.u[k], w.u[k]};
  }
  if (w.level[0] <= s && s < w.level[n - 1]) return Interval{w.u[n], w.u[n]};
  return std::nullopt;
}

struct LedgerRow {
  Interval signed_levels;  // in window (signed) levels
  Interval rising;
  Interval falling;
  Interval gap;
};

std::vector<LedgerRow> build_ledger(const Window& w) {
  std::vector<double> levels = w.level;
  std::sort(levels.begin(), levels.end(), std::greater<>());
  levels.erase(std::unique(levels.begin(), levels.end()), levels.end());

  std::vector<LedgerRow> rows;
  rows.reserve(2 * levels.size());
  auto push = [&](Interval band, double probe) {
    const auto r = rising_inverse(w, probe);
    const auto f = falling_inverse(w, probe);
    if (!r || !f) return;
    rows.push_back({band, *r, *f, interval_sub(*f, *r)});
  };
  for (std::size_t i = 0; i < levels.size(); ++i) {
    push({levels[i], levels[i]}, levels[i]);
    if (i + 1 < levels.size()) push({levels[i + 1], levels[i]}, 0.5 * (levels[i] + levels[i + 1]));
  }
  return rows;
}

void check_delta(double delta) {
  if (!std::isfinite(delta) || !(delta > 0.0) || !(delta < kTwoPi)) {
    throw Error(ErrorKind::InvalidDelta, "delta must lie in (0, 2π), got " + std::to_string(delta));
  }
}

// Chooses which of the two lines carries two touch points. Prefers a strict
// triple; otherwise the first containment in the order (min of A in B),
// (max of A in B), (min of B in A), (max of B in A).
TriplePair assign_roles(const SupportProfile& profile, const PolygonalArc& arc, double theta_a, double theta_b) {
  const TouchSet ta = eval_T(profile, theta_a);
  const TouchSet tb = eval_T(profile, theta_b);
  const double slack = profile.param_slack();

  struct Candidate {
    double theta_double;
    double theta_single;
    Interval dbl;
    double s2;
  };
  const std::array<Candidate, 4> candidates{{
      {theta_b, theta_a, tb.filled(), ta.lo},
      {theta_b, theta_a, tb.filled(), ta.hi},
      {theta_a, theta_b, ta.filled(), tb.lo},
      {theta_a, theta_b, ta.filled(), tb.hi},
  }};
  auto is_strict = [&](const Candidate& c) { return c.dbl.lo + slack < c.s2 && c.s2 < c.dbl.hi - slack; };
  auto contained = [&](const Candidate& c) { return !c.dbl.degenerate() && c.dbl.contains(c.s2, slack); };

  const Candidate* pick = nullptr;
  for (const Candidate& c : candidates) {
    if (is_strict(c)) {
      pick = &c;
      break;
    }
  }
  if (pick == nullptr) {
    for (const Candidate& c : candidates) {
      if (contained(c)) {
        pick = &c;
        break;
      }
    }
  }
  if (pick == nullptr) pick = &candidates[0];

  TriplePair out;
  out.theta_double = canonical_angle(pick->theta_double);
  out.theta_single = canonical_angle(pick->theta_single);
  out.s1 = pick->dbl.lo;
  out.s3 = pick->dbl.hi;
  out.s2 = std::clamp(pick->s2, out.s1, out.s3);
  out.strict = is_strict(*pick);
  out.double_line = {Angle(out.theta_double), point_at(arc, out.s1)};
  out.single_line = {Angle(out.theta_single), point_at(arc, out.s2)};
  return out;
}

// Does the ordered pair (x, x + gap) sit inside the window with x on the
// rising side and x + gap on the falling side?
bool fits_window(const SupportProfile& profile, ScanMode mode, double x, double gap) {
  const double eps = profile.tolerances().eps_angle;
  const auto steps = profile.steps();
  const std::size_t first = mode == ScanMode::mountain ? profile.min_step() : profile.apex_step();
  const std::size_t peak = mode == ScanMode::mountain ? profile.apex_step() : profile.min_step();
  const double anchor = steps[first].angles.lo;
  double wx = ccw_gap(anchor, x);
  if (wx > kTwoPi - eps) wx -= kTwoPi;
  const double wy = wx + gap;
  const double peak_lo = ccw_gap(anchor, steps[peak].angles.lo);
  const double peak_hi = peak_lo + steps[peak].width();
  return wy <= kTwoPi + eps && wx <= peak_hi + eps && wy >= peak_lo - eps;
}

TriplePair from_enumerator(const SupportProfile& profile, const PolygonalArc& arc, double delta, ScanMode mode) {
  const auto configs = enumerate_triples(profile, arc, delta);
  for (const TripleConfiguration& c : configs) {
    if (mode == ScanMode::mountain ? c.mountain_shaped : c.valley_shaped) {
      TriplePair p = c.pair;
      p.mode = mode;
      p.requested_delta = delta;
      p.realized_gap = mode == ScanMode::mountain ? delta : kTwoPi - delta;
      p.guaranteed = false;
      return p;
    }
  }
  throw Error(ErrorKind::NotFound, "no strict " + std::string(to_string(mode)) + " pair at delta " + std::to_string(delta) +
                                       " (below the guaranteed range)");
}

}  // namespace

std::vector<ScanStep> scan_ledger(const SupportProfile& profile, ScanMode mode) {
  const Window w = make_window(profile, mode);
  std::vector<ScanStep> out;
  for (const LedgerRow& row : build_ledger(w)) {
    Interval levels = row.signed_levels;
    if (w.sign < 0.0) levels = {-levels.hi, -levels.lo};
    out.push_back({levels, row.gap});
  }
  return out;
}

TriplePair find_pair(const SupportProfile& profile, const PolygonalArc& arc, double delta, ScanMode mode) {
  check_delta(delta);
  const double eps = profile.tolerances().eps_angle;
  const double threshold = mode == ScanMode::mountain ? profile.delta_n() : profile.delta_1();
  if (delta < threshold - eps) return from_enumerator(profile, arc, delta, mode);

  const Window w = make_window(profile, mode);
  double rising_at = 0.0;
  double falling_at = 0.0;
  if (std::abs(delta - threshold) <= eps) {
    // The peak set itself is [α, α + width]; its two ends carry the pair.
    rising_at = w.u[w.peak];
    falling_at = w.u[w.peak + 1];
  } else {
    bool found = false;
    for (const LedgerRow& row : build_ledger(w)) {
      if (!row.gap.contains(delta, eps)) continue;
      if (row.falling.degenerate()) {
        falling_at = row.falling.lo;
        rising_at = std::clamp(falling_at - delta, row.rising.lo, row.rising.hi);
      } else if (row.rising.degenerate()) {
        rising_at = row.rising.lo;
        falling_at = std::clamp(rising_at + delta, row.falling.lo, row.falling.hi);
      } else {
        // Only the peak row has both preimages non-degenerate; take the
        // smallest rising angle that works.
        rising_at = std::clamp(row.falling.lo - delta, row.rising.lo, row.rising.hi);
        falling_at = rising_at + delta;
      }
      found = true;
      break;
    }
    if (!found) throw Error(ErrorKind::NotFound, "level scan found no level for delta " + std::to_string(delta));
  }

  const double theta_a = canonical_angle(w.anchor + rising_at);
  const double theta_b = canonical_angle(w.anchor + falling_at);
  TriplePair p = assign_roles(profile, arc, theta_a, theta_b);
  p.mode = mode;
  p.requested_delta = delta;
  p.realized_gap = mode == ScanMode::mountain ? ccw_gap(theta_a, theta_b) : ccw_gap(theta_b, theta_a);
  p.near_tie = distance_to_jump_gap(profile, delta) <= eps;
  p.guaranteed = true;
  return p;
}

TriplePair find_pair_mountain(const SupportProfile& profile, const PolygonalArc& arc, double delta) {
  return find_pair(profile, arc, delta, ScanMode::mountain);
}

TriplePair find_pair_valley(const SupportProfile& profile, const PolygonalArc& arc, double delta) {
  return find_pair(profile, arc, delta, ScanMode::valley);
}

bool same_pair(const TriplePair& a, const TriplePair& b, const SupportProfile& profile) noexcept {
  const double eps = profile.tolerances().eps_angle;
  const double slack = profile.param_slack();
  auto close = [&](double x, double y) { return circular_distance(x, y) <= eps; };
  const bool angles = (close(a.theta_double, b.theta_double) && close(a.theta_single, b.theta_single)) ||
                      (close(a.theta_double, b.theta_single) && close(a.theta_single, b.theta_double));
  return angles && std::abs(a.s1 - b.s1) <= slack && std::abs(a.s2 - b.s2) <= slack && std::abs(a.s3 - b.s3) <= slack;
}

CorollaryResult corollary_check(const SupportProfile& profile, const PolygonalArc& arc, double delta) {
  CorollaryResult r;
  r.mountain = find_pair_mountain(profile, arc, delta);
  r.valley = find_pair_valley(profile, arc, delta);
  r.identical = same_pair(r.mountain, r.valley, profile);
  return r;
}

std::vector<TripleConfiguration> enumerate_triples(const SupportProfile& profile, const PolygonalArc& arc, double gap) {
  check_delta(gap);
  const double eps = profile.tolerances().eps_angle;
  const double slack = profile.param_slack();
  std::vector<TripleConfiguration> out;

  for (const Jump& jump : profile.jumps()) {
    const double phi = jump.angle;
    const TouchSet dbl = eval_T(profile, phi);
    for (const double sign : {1.0, -1.0}) {
      const double psi = canonical_angle(phi + sign * gap);
      const TouchSet single = eval_T(profile, psi);
      double s2 = 0.0;
      bool ok = false;
      for (const double s : {single.lo, single.hi}) {
        if (dbl.lo + slack < s && s < dbl.hi - slack) {
          s2 = s;
          ok = true;
          break;
        }
      }
      if (!ok) continue;

      // Ordered pair (first, first + gap).
      const double first = sign > 0.0 ? phi : psi;
      const bool mountain = fits_window(profile, ScanMode::mountain, first, gap);
      const bool valley = fits_window(profile, ScanMode::valley, first, gap);

      auto same_angles = [&](const TriplePair& p) {
        return (circular_distance(p.theta_double, phi) <= eps && circular_distance(p.theta_single, psi) <= eps) ||
               (circular_distance(p.theta_double, psi) <= eps && circular_distance(p.theta_single, phi) <= eps);
      };
      const auto dup = std::find_if(out.begin(), out.end(), [&](const TripleConfiguration& c) { return same_angles(c.pair); });
      if (dup != out.end()) {
        dup->mountain_shaped = dup->mountain_shaped || mountain;
        dup->valley_shaped = dup->valley_shaped || valley;
        continue;
      }

      TripleConfiguration c;
      c.pair.theta_double = phi;
      c.pair.theta_single = psi;
      c.pair.s1 = dbl.lo;
      c.pair.s2 = s2;
      c.pair.s3 = dbl.hi;
      c.pair.strict = true;
      c.pair.double_line = {Angle(phi), point_at(arc, dbl.lo)};
      c.pair.single_line = {Angle(psi), point_at(arc, s2)};
      c.pair.requested_delta = gap;
      c.pair.realized_gap = gap;
      c.pair.near_tie = distance_to_jump_gap(profile, gap) <= eps;
      c.mountain_shaped = mountain;
      c.valley_shaped = valley;
      c.pair.mode = mountain || !valley ? ScanMode::mountain : ScanMode::valley;
      out.push_back(c);
    }
  }
  return out;
}

std::size_t count_shaped(const std::vector<TripleConfiguration>& configs, ScanMode mode) noexcept {
  return static_cast<std::size_t>(std::count_if(configs.begin(), configs.end(), [mode](const TripleConfiguration& c) {
    return mode == ScanMode::mountain ? c.mountain_shaped : c.valley_shaped;
  }));
}

double distance_to_jump_gap(const SupportProfile& profile, double gap) noexcept {
  const auto jumps = profile.jumps();
  double best = kTwoPi;
  for (std::size_t i = 0; i < jumps.size(); ++i) {
    for (std::size_t j = 0; j < jumps.size(); ++j) {
      if (i == j) continue;
      best = std::min(best, std::abs(ccw_gap(jumps[i].angle, jumps[j].angle) - gap));
    }
  }
  return best;
}

TripleReport verify_triple(const PolygonalArc& arc, const TriplePair& pair, const Tolerances& tol) {
  TripleReport r;
  const double slack = tol.eps_touch * arc.diagonal();
  auto on_line = [&](const DirectedLine& line, double s) {
    try {
      return std::abs(left_offset(line, point_at(arc, s))) <= slack;
    } catch (const Error&) {
      return false;
    }
  };
  r.double_touch = on_line(pair.double_line, pair.s1) && on_line(pair.double_line, pair.s3);
  r.single_touch = on_line(pair.single_line, pair.s2);
  r.left_side = min_left_offset(pair.double_line, arc) >= -slack && min_left_offset(pair.single_line, arc) >= -slack;
  r.ordering = pair.strict ? (pair.s1 + slack < pair.s2 && pair.s2 + slack < pair.s3)
                           : (pair.s1 <= pair.s2 && pair.s2 <= pair.s3);
  return r;
}

}  // namespace arcsupport
