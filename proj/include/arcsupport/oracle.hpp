#pragma once

// Brute-force references that never consult the hull or the profile:
// projection-based touch sets, a grid sweep for triple pairs, Andrew's
// monotone-chain hull, and a seeded generator of random simple arcs.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "arcsupport/arc.hpp"
#include "arcsupport/support_profile.hpp"

namespace arcsupport {

/// Touch set of L_θ computed directly from the vertices: the extreme
/// projection on the outward normal (sin θ, -cos θ) and the smallest/largest
/// parameter among vertices within eps_touch * diagonal of it.
TouchSet oracle_touch_set(const PolygonalArc& arc, double theta, const Tolerances& tol);

/// Run of consecutive grid angles where (θ, θ + gap) validates as a strict
/// triple configuration.
struct GridCluster {
  std::size_t first_index = 0;
  std::size_t last_index = 0;  // may be < first_index when the run wraps
  double theta_lo = 0.0;
  double theta_hi = 0.0;       // canonical; theta_hi < theta_lo when wrapping
  std::size_t hits = 0;
};

/// Sweeps θ_i = i * resolution over [0, 2π). Touch sets use a slack of
/// max(10 * eps_touch, resolution) * diagonal so that grid angles next to a
/// jump still see both of its corners. Clusters describing the same unordered
/// angle pair (gap = π) are reported once.
std::vector<GridCluster> grid_scan_pairs(const PolygonalArc& arc, double gap, double resolution, const Tolerances& tol);

/// True when some cluster, widened by one grid step, contains x.
bool cluster_covers(const GridCluster& cluster, double x, double resolution) noexcept;

/// Andrew's monotone chain; counterclockwise indices into `points`, starting
/// at the smallest index on the hull. Collinear boundary points are dropped.
/// Throws StraightArc.
std::vector<std::size_t> monotone_chain_hull(std::span<const Point2> points, const Tolerances& tol);

struct DeltaPolicy {
  enum class Kind { safe_range, full_range, fixed };
  Kind kind = Kind::safe_range;
  double value = 0.0;  // used by fixed
};

struct FuzzConfig {
  std::size_t trials = 100;
  std::uint64_t seed = 42;
  std::size_t min_vertices = 4;
  std::size_t max_vertices = 12;
  double coordinate_box = 1.0;
  DeltaPolicy delta_policy;
  Tolerances tol;

  /// Throws std::invalid_argument on an unusable configuration.
  void validate() const;
};

/// Margin kept between drawn deltas and the ends of the guaranteed ranges.
inline constexpr double kSafeMargin = 1e-3;

/// Total rejected candidates tolerated per arc before GenerationExhausted.
inline constexpr std::size_t kGenerationRetryCap = 10'000;

/// Seed of the per-trial generator: splitmix64(seed ^ splitmix64(trial_index + stream)).
std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t trial_index, std::uint64_t stream = 0) noexcept;

/// Deterministic in (seed, trial_index). Vertices are drawn uniformly in
/// [0, coordinate_box]^2 one at a time; a candidate that would break
/// simplicity is rejected. Straight results are rejected as a whole.
PolygonalArc random_simple_arc(const FuzzConfig& config, std::uint64_t trial_index);

}  // namespace arcsupport
