#include <algorithm>
#include <limits>

#include "arcsupport/simd/touch_kernels.hpp"

namespace arcsupport::simd {

double max_projection_scalar(const VertexLanes& v, double nx, double ny) noexcept {
  double best = -std::numeric_limits<double>::infinity();
  const std::size_t n = v.xs.size();
  for (std::size_t i = 0; i < n; ++i) {
    const double p = v.xs[i] * nx + v.ys[i] * ny;
    best = std::max(best, p);
  }
  return best;
}

TouchExtent touch_extent_scalar(const VertexLanes& v, double nx, double ny, double slack) noexcept {
  TouchExtent out;
  out.extreme = max_projection_scalar(v, nx, ny);
  const double threshold = out.extreme - slack;
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();
  const std::size_t n = v.xs.size();
  for (std::size_t i = 0; i < n; ++i) {
    const double p = v.xs[i] * nx + v.ys[i] * ny;
    if (p >= threshold) {
      lo = std::min(lo, v.params[i]);
      hi = std::max(hi, v.params[i]);
      ++out.count;
    }
  }
  out.min_param = lo;
  out.max_param = hi;
  return out;
}

}  // namespace arcsupport::simd
