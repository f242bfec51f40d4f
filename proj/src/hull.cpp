#include "arcsupport/hull.hpp"

#include <algorithm>
#include <deque>

namespace arcsupport {
namespace {

bool on_segment(Point2 p, Point2 a, Point2 b) noexcept {
  const double t = dot(p - a, b - a);
  return t >= 0.0 && t <= dot(b - a, b - a);
}

}  // namespace

Hull melkman_hull(const PolygonalArc& arc, const Tolerances& tol) {
  const auto v = arc.vertices();
  const double scale = arc.diagonal();
  const std::size_t n = v.size();
  auto turn = [&](std::size_t a, std::size_t b, std::size_t c) { return orient(v[a], v[b], v[c], tol, scale); };

  // A collinear prefix of a simple arc runs monotonically along its line, so
  // its hull is the segment from vertex 0 to the last collinear vertex.
  std::size_t k = 2;
  while (k < n && turn(0, 1, k) == 0) ++k;
  if (k >= n) throw Error(ErrorKind::StraightArc, "all arc vertices are collinear");

  std::deque<std::size_t> d;
  if (turn(0, k - 1, k) > 0) {
    d = {k, 0, k - 1, k};
  } else {
    d = {k, k - 1, 0, k};
  }

  // Inside-or-on test against the directed edge a -> b.
  auto holds = [&](std::size_t a, std::size_t b, std::size_t c) {
    const int o = turn(a, b, c);
    return o > 0 || (o == 0 && on_segment(v[c], v[a], v[b]));
  };

  for (std::size_t i = k + 1; i < n; ++i) {
    const std::size_t t = d.size() - 1;
    if (holds(d[t - 1], d[t], i) && holds(d[0], d[1], i)) continue;
    while (d.size() >= 3 && turn(d[d.size() - 2], d.back(), i) <= 0) d.pop_back();
    d.push_back(i);
    while (d.size() >= 3 && turn(i, d[0], d[1]) <= 0) d.pop_front();
    d.push_front(i);
  }

  std::vector<std::size_t> cycle(d.begin(), d.end() - 1);
  // Drop vertices left collinear at the seam of the deque.
  bool changed = true;
  while (changed && cycle.size() >= 3) {
    changed = false;
    for (std::size_t j = 0; j < cycle.size(); ++j) {
      const std::size_t prev = cycle[(j + cycle.size() - 1) % cycle.size()];
      const std::size_t next = cycle[(j + 1) % cycle.size()];
      if (turn(prev, cycle[j], next) <= 0) {
        cycle.erase(cycle.begin() + static_cast<std::ptrdiff_t>(j));
        changed = true;
        break;
      }
    }
  }
  if (cycle.size() < 3) throw Error(ErrorKind::StraightArc, "hull is degenerate");

  const auto first = std::min_element(cycle.begin(), cycle.end());
  std::rotate(cycle.begin(), first, cycle.end());

  Hull hull;
  hull.corners.reserve(cycle.size());
  for (std::size_t idx : cycle) {
    HullCorner c;
    c.point = v[idx];
    c.param = arc.params()[idx];
    c.vertex = idx;
    hull.corners.push_back(c);
  }
  return hull;
}

Hull corner_steps(Hull hull) {
  auto& cs = hull.corners;
  const std::size_t n = cs.size();
  for (std::size_t j = 0; j < n; ++j) {
    const Point2 a = cs[(j + n - 1) % n].point;
    const Point2 b = cs[j].point;
    const Point2 c = cs[(j + 1) % n].point;
    const Angle in = angle_of(b - a);
    const Angle out = angle_of(c - b);
    cs[j].exterior_angle = ccw_gap(in, out);
    cs[j].step = {in.radians(), in.radians() + cs[j].exterior_angle};
  }
  return hull;
}

Hull build_hull(const PolygonalArc& arc) { return corner_steps(melkman_hull(arc)); }

}  // namespace arcsupport
