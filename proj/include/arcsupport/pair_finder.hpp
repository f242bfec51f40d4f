#pragma once

// Pairs of support lines with triple touch points.
//
// A triple pair is two support lines whose directions differ by a prescribed
// angle, one touching γ(s1) and γ(s3), the other touching γ(s2), with
// s1 < s2 < s3. The mountain scan walks the unrolled graph of the filled
// function downward from the apex (window anchored at the minimum step); the
// valley scan walks upward from the minimum (window anchored at the apex).

#include <string_view>
#include <vector>

#include "arcsupport/support_profile.hpp"

namespace arcsupport {

enum class ScanMode { mountain, valley };

std::string_view to_string(ScanMode mode) noexcept;

struct TriplePair {
  ScanMode mode = ScanMode::mountain;
  double theta_double = 0.0;  // canonical; line through γ(s1) and γ(s3)
  double theta_single = 0.0;  // canonical; line through γ(s2)
  DirectedLine double_line;   // anchored at γ(s1)
  DirectedLine single_line;   // anchored at γ(s2)
  double s1 = 0.0;
  double s2 = 0.0;
  double s3 = 0.0;
  bool strict = false;
  double requested_delta = 0.0;
  /// Counterclockwise gap between the two directions: δ for the mountain
  /// scan, 2π - δ for the valley scan.
  double realized_gap = 0.0;
  /// The requested gap is within eps_angle of a jump-to-jump gap.
  bool near_tie = false;
  /// False when delta was below the scan's threshold and the pair came from
  /// the enumerator.
  bool guaranteed = true;
};

/// One row of the scan: the interval-valued gap D over a level set.
struct ScanStep {
  Interval level_interval;
  Interval gap_interval;
};

/// Ledger of D in scan order: from t_n downward for the mountain, from t_1
/// upward for the valley. Rows alternate between a single level (interval
/// gap) and an open band between levels (single gap).
std::vector<ScanStep> scan_ledger(const SupportProfile& profile, ScanMode mode);

/// Pair of support lines with counterclockwise gap delta from the rising to
/// the falling side of the mountain window. Guaranteed for delta_n <= delta < 2π.
/// Throws InvalidDelta outside (0, 2π); below delta_n falls back to the
/// enumerator (guaranteed = false) and throws NotFound if nothing qualifies.
TriplePair find_pair_mountain(const SupportProfile& profile, const PolygonalArc& arc, double delta);

/// Valley counterpart; guaranteed for delta_1 <= delta < 2π. The lines differ
/// by 2π - delta read counterclockwise from the later to the earlier one.
TriplePair find_pair_valley(const SupportProfile& profile, const PolygonalArc& arc, double delta);

TriplePair find_pair(const SupportProfile& profile, const PolygonalArc& arc, double delta, ScanMode mode);

struct CorollaryResult {
  bool identical = false;
  TriplePair mountain;
  TriplePair valley;
};

/// Runs both scans at delta and compares the results as unordered angle pairs
/// (eps_angle) with matching triples (param slack).
CorollaryResult corollary_check(const SupportProfile& profile, const PolygonalArc& arc, double delta);

bool same_pair(const TriplePair& a, const TriplePair& b, const SupportProfile& profile) noexcept;

/// A strict configuration found by exhaustive search, with the scan window(s)
/// whose shape it fits.
struct TripleConfiguration {
  TriplePair pair;
  bool mountain_shaped = false;
  bool valley_shaped = false;
};

/// Every strict configuration whose directions are `gap` apart
/// counterclockwise. The double line must sit on a jump, so the candidates are
/// (jump φ, φ + gap) and (jump φ, φ - gap) over all jumps. Configurations are
/// distinct as unordered angle pairs.
std::vector<TripleConfiguration> enumerate_triples(const SupportProfile& profile, const PolygonalArc& arc, double gap);

/// Number of enumerated configurations that fit the given scan window.
std::size_t count_shaped(const std::vector<TripleConfiguration>& configs, ScanMode mode) noexcept;

/// Smallest |gap - g| over counterclockwise gaps g between two distinct jumps.
double distance_to_jump_gap(const SupportProfile& profile, double gap) noexcept;

struct TripleReport {
  bool double_touch = false;  // γ(s1), γ(s3) on the double line
  bool single_touch = false;  // γ(s2) on the single line
  bool left_side = false;     // every vertex on the closed left of both lines
  bool ordering = false;      // s1 < s2 < s3 when the pair claims strictness

  bool passed() const noexcept { return double_touch && single_touch && left_side && ordering; }
};

/// Checks the defining property of a pair at eps_touch * diagonal.
TripleReport verify_triple(const PolygonalArc& arc, const TriplePair& pair, const Tolerances& tol);

}  // namespace arcsupport
