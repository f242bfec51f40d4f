#pragma once

// Shared fixtures and a brute-force pair search that only looks at raw
// vertices (no hull, no profile, no library oracle).

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "arcsupport/arc.hpp"

namespace fixtures {

using arcsupport::Point2;
using arcsupport::PolygonalArc;

using arcsupport::kPi;

inline PolygonalArc e1() {
  const std::vector<Point2> v{{0, 0}, {1, 0}, {1, 1}};
  return arcsupport::build_arc(v);
}

inline PolygonalArc e2() {
  const std::vector<Point2> v{{0, 0}, {3, 0}, {3, 1}, {2, 1}};
  return arcsupport::build_arc(v);
}

inline std::string data_path(const std::string& name) { return std::string(ARCSUPPORT_TEST_DATA_DIR) + "/" + name; }

inline double wrap(double a) {
  a = std::fmod(a, 2.0 * kPi);
  if (a < 0) a += 2.0 * kPi;
  if (a >= 2.0 * kPi) a -= 2.0 * kPi;
  return a;
}

struct Touch {
  double lo = 0;
  double hi = 0;
  int count = 0;
};

// Parameters of the vertices on L_theta (outward normal (sin, -cos)).
inline Touch brute_touch(const PolygonalArc& arc, double theta, double slack) {
  const double nx = std::sin(theta), ny = -std::cos(theta);
  double best = -1e300;
  for (const Point2& p : arc.vertices()) best = std::max(best, p.x * nx + p.y * ny);
  Touch t{1e300, -1e300, 0};
  for (std::size_t i = 0; i < arc.size(); ++i) {
    const Point2 p = arc.vertices()[i];
    if (p.x * nx + p.y * ny >= best - slack) {
      t.lo = std::min(t.lo, arc.params()[i]);
      t.hi = std::max(t.hi, arc.params()[i]);
      ++t.count;
    }
  }
  return t;
}

struct BrutePair {
  double theta_double = 0;
  double theta_single = 0;
  double s1 = 0, s2 = 0, s3 = 0;
};

// Every strict configuration (double line through s1 < s3, single line
// through s2 strictly between) with the two directions `gap` apart in either
// order. Double-line directions come from all vertex-pair chords.
inline std::vector<BrutePair> brute_pairs(const PolygonalArc& arc, double gap) {
  const double slack = 1e-9 * arc.diagonal();
  std::vector<double> dirs;
  const auto v = arc.vertices();
  for (std::size_t i = 0; i < v.size(); ++i) {
    for (std::size_t j = 0; j < v.size(); ++j) {
      if (i != j) dirs.push_back(wrap(std::atan2(v[j].y - v[i].y, v[j].x - v[i].x)));
    }
  }
  std::vector<BrutePair> out;
  for (double d : dirs) {
    const Touch dt = brute_touch(arc, d, slack);
    if (dt.count < 2) continue;
    for (double s : {wrap(d + gap), wrap(d - gap)}) {
      const Touch st = brute_touch(arc, s, slack);
      if (st.count != 1) continue;
      const double p = st.lo;
      if (!(dt.lo < p - slack && p + slack < dt.hi)) continue;
      bool dup = false;
      for (const BrutePair& q : out) {
        const auto close = [](double a, double b) { return std::abs(std::remainder(a - b, 2.0 * kPi)) < 1e-9; };
        if (close(q.theta_double, d) && close(q.theta_single, s)) dup = true;
      }
      if (!dup) out.push_back({d, s, dt.lo, p, dt.hi});
    }
  }
  return out;
}

inline double angle_diff(double a, double b) { return std::abs(std::remainder(a - b, 2.0 * kPi)); }

}  // namespace fixtures
