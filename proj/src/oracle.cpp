#include "arcsupport/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include "arcsupport/hull.hpp"

namespace arcsupport {

TouchSet oracle_touch_set(const PolygonalArc& arc, double theta, const Tolerances& tol) {
  const double nx = std::sin(theta);
  const double ny = -std::cos(theta);
  const simd::TouchExtent t = simd::touch_extent(arc.lanes(), nx, ny, tol.eps_touch * arc.diagonal());
  return {t.min_param, t.max_param};
}

namespace {

bool strict_in(const simd::TouchExtent& dbl, double s, double slack) noexcept {
  return dbl.min_param + slack < s && s < dbl.max_param - slack;
}

bool validates(const simd::TouchExtent& a, const simd::TouchExtent& b, double slack) noexcept {
  return strict_in(b, a.min_param, slack) || strict_in(b, a.max_param, slack) || strict_in(a, b.min_param, slack) ||
         strict_in(a, b.max_param, slack);
}

}  // namespace

std::vector<GridCluster> grid_scan_pairs(const PolygonalArc& arc, double gap, double resolution, const Tolerances& tol) {
  if (!(resolution > 0.0)) throw std::invalid_argument("grid resolution must be positive");
  const auto count = static_cast<std::size_t>(std::ceil(kTwoPi / resolution - 1e-9));
  const double slack = std::max(10.0 * tol.eps_touch, resolution) * arc.diagonal();
  const double param_slack = tol.eps_touch * arc.diagonal();
  const simd::VertexLanes lanes = arc.lanes();

  std::vector<char> hit(count, 0);
  for (std::size_t i = 0; i < count; ++i) {
    const double theta = static_cast<double>(i) * resolution;
    const simd::TouchExtent a = simd::touch_extent(lanes, std::sin(theta), -std::cos(theta), slack);
    const double other = theta + gap;
    const simd::TouchExtent b = simd::touch_extent(lanes, std::sin(other), -std::cos(other), slack);
    hit[i] = validates(a, b, param_slack) ? 1 : 0;
  }

  std::vector<GridCluster> clusters;
  for (std::size_t i = 0; i < count; ++i) {
    if (!hit[i] || (i > 0 && hit[i - 1])) continue;
    GridCluster c;
    c.first_index = i;
    std::size_t j = i;
    while (j + 1 < count && hit[j + 1]) ++j;
    c.last_index = j;
    c.hits = j - i + 1;
    clusters.push_back(c);
  }
  // Join a run that wraps through θ = 0.
  if (clusters.size() >= 2 && clusters.front().first_index == 0 && clusters.back().last_index == count - 1) {
    clusters.back().last_index = clusters.front().last_index;
    clusters.back().hits += clusters.front().hits;
    clusters.erase(clusters.begin());
  }
  for (GridCluster& c : clusters) {
    c.theta_lo = static_cast<double>(c.first_index) * resolution;
    c.theta_hi = static_cast<double>(c.last_index) * resolution;
  }

  // At gap = π a cluster at θ and one at θ + π describe the same pair.
  std::vector<GridCluster> unique;
  for (const GridCluster& c : clusters) {
    const double mid = c.theta_lo + 0.5 * ccw_gap(c.theta_lo, c.theta_hi);
    const double reach = 0.5 * ccw_gap(c.theta_lo, c.theta_hi) + 2.0 * resolution;
    const bool seen = std::any_of(unique.begin(), unique.end(), [&](const GridCluster& u) {
      const double umid = u.theta_lo + 0.5 * ccw_gap(u.theta_lo, u.theta_hi);
      const double ureach = 0.5 * ccw_gap(u.theta_lo, u.theta_hi) + 2.0 * resolution;
      return circular_distance(umid + gap, mid) <= reach + ureach && circular_distance(mid + gap, umid) <= reach + ureach;
    });
    if (!seen) unique.push_back(c);
  }
  return unique;
}

bool cluster_covers(const GridCluster& cluster, double x, double resolution) noexcept {
  const double width = ccw_gap(cluster.theta_lo, cluster.theta_hi);
  return ccw_gap(cluster.theta_lo - resolution, x) <= width + 2.0 * resolution * (1.0 + 1e-9);
}

std::vector<std::size_t> monotone_chain_hull(std::span<const Point2> points, const Tolerances& tol) {
  if (points.size() < 3) throw Error(ErrorKind::StraightArc, "fewer than 3 points");
  std::vector<std::size_t> order(points.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return points[a].x < points[b].x || (points[a].x == points[b].x && points[a].y < points[b].y);
  });
  double min_x = points[order.front()].x, max_x = points[order.back()].x;
  double min_y = points[0].y, max_y = points[0].y;
  for (const Point2& p : points) {
    min_y = std::min(min_y, p.y);
    max_y = std::max(max_y, p.y);
  }
  const double scale = std::hypot(max_x - min_x, max_y - min_y);

  std::vector<std::size_t> hull(2 * points.size());
  std::size_t k = 0;
  auto turn = [&](std::size_t a, std::size_t b, std::size_t c) { return orient(points[a], points[b], points[c], tol, scale); };
  for (std::size_t i : order) {
    while (k >= 2 && turn(hull[k - 2], hull[k - 1], i) <= 0) --k;
    hull[k++] = i;
  }
  const std::size_t lower = k + 1;
  for (auto it = order.rbegin() + 1; it != order.rend(); ++it) {
    while (k >= lower && turn(hull[k - 2], hull[k - 1], *it) <= 0) --k;
    hull[k++] = *it;
  }
  hull.resize(k - 1);
  if (hull.size() < 3) throw Error(ErrorKind::StraightArc, "all points are collinear");
  std::rotate(hull.begin(), std::min_element(hull.begin(), hull.end()), hull.end());
  return hull;
}

void FuzzConfig::validate() const {
  if (trials < 1) throw std::invalid_argument("trials must be >= 1");
  if (min_vertices < 3 || max_vertices < min_vertices) throw std::invalid_argument("vertex range must satisfy 3 <= min <= max");
  if (!(coordinate_box > 0.0)) throw std::invalid_argument("coordinate box must be positive");
  if (delta_policy.kind == DeltaPolicy::Kind::fixed && !(delta_policy.value > 0.0 && delta_policy.value < kTwoPi)) {
    throw std::invalid_argument("fixed delta must lie in (0, 2π)");
  }
  tol.validate();
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

// Would appending `next` after the chain keep it simple?
bool extends_simply(const std::vector<Point2>& chain, Point2 next, const Tolerances& tol, double scale) {
  const std::size_t m = chain.size();
  const Point2 last = chain[m - 1];
  if (distance(last, next) <= tol.eps_touch * scale) return false;
  if (m >= 2) {
    const Point2 prev = chain[m - 2];
    if (orient(prev, last, next, tol, scale) == 0 && dot(last - prev, next - last) < 0.0) return false;
  }
  for (std::size_t i = 0; i + 2 < m; ++i) {
    if (segments_intersect(chain[i], chain[i + 1], last, next, tol, scale)) return false;
  }
  return true;
}

}  // namespace

std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t trial_index, std::uint64_t stream) noexcept {
  return splitmix64(seed ^ splitmix64(trial_index + (stream << 40)));
}

PolygonalArc random_simple_arc(const FuzzConfig& config, std::uint64_t trial_index) {
  config.validate();
  std::mt19937_64 rng(trial_seed(config.seed, trial_index));
  std::uniform_int_distribution<std::size_t> size_dist(config.min_vertices, config.max_vertices);
  std::uniform_real_distribution<double> coord(0.0, config.coordinate_box);
  const std::size_t n = size_dist(rng);
  // The box diagonal bounds every arc diagonal, so it is a safe tolerance scale.
  const double scale = config.coordinate_box * std::sqrt(2.0);

  std::size_t rejections = 0;
  constexpr std::size_t kStallLimit = 200;
  while (rejections < kGenerationRetryCap) {
    std::vector<Point2> chain{{coord(rng), coord(rng)}};
    std::size_t stall = 0;
    while (chain.size() < n && stall < kStallLimit && rejections < kGenerationRetryCap) {
      const Point2 candidate{coord(rng), coord(rng)};
      if (extends_simply(chain, candidate, config.tol, scale)) {
        chain.push_back(candidate);
        stall = 0;
      } else {
        ++stall;
        ++rejections;
      }
    }
    if (chain.size() < n) continue;
    try {
      PolygonalArc arc = build_arc(chain, config.tol);
      (void)melkman_hull(arc);
      return arc;
    } catch (const Error&) {
      ++rejections;
    }
  }
  throw Error(ErrorKind::GenerationExhausted,
              "no simple arc after " + std::to_string(kGenerationRetryCap) + " rejected candidates (trial " +
                  std::to_string(trial_index) + ")");
}

}  // namespace arcsupport
