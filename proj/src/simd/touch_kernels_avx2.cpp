// Compiled with -mavx2 (and without -mfma); only reached after a runtime
// CPU check.

#include <immintrin.h>

#include <algorithm>
#include <bit>
#include <limits>

#include "arcsupport/simd/touch_kernels.hpp"

namespace arcsupport::simd {
namespace {

inline double hmax(__m256d v) noexcept {
  const __m128d lo = _mm256_castpd256_pd128(v);
  const __m128d hi = _mm256_extractf128_pd(v, 1);
  const __m128d m = _mm_max_pd(lo, hi);
  return std::max(_mm_cvtsd_f64(m), _mm_cvtsd_f64(_mm_unpackhi_pd(m, m)));
}

inline double hmin(__m256d v) noexcept {
  const __m128d lo = _mm256_castpd256_pd128(v);
  const __m128d hi = _mm256_extractf128_pd(v, 1);
  const __m128d m = _mm_min_pd(lo, hi);
  return std::min(_mm_cvtsd_f64(m), _mm_cvtsd_f64(_mm_unpackhi_pd(m, m)));
}

inline __m256d project(const double* xs, const double* ys, __m256d nx, __m256d ny) noexcept {
  return _mm256_add_pd(_mm256_mul_pd(_mm256_loadu_pd(xs), nx), _mm256_mul_pd(_mm256_loadu_pd(ys), ny));
}

}  // namespace

double max_projection_avx2(const VertexLanes& v, double nx, double ny) noexcept {
  const std::size_t n = v.xs.size();
  const double* xs = v.xs.data();
  const double* ys = v.ys.data();
  const __m256d vnx = _mm256_set1_pd(nx);
  const __m256d vny = _mm256_set1_pd(ny);
  __m256d acc = _mm256_set1_pd(-std::numeric_limits<double>::infinity());
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) acc = _mm256_max_pd(acc, project(xs + i, ys + i, vnx, vny));
  double best = hmax(acc);
  for (; i < n; ++i) best = std::max(best, xs[i] * nx + ys[i] * ny);
  return best;
}

TouchExtent touch_extent_avx2(const VertexLanes& v, double nx, double ny, double slack) noexcept {
  constexpr double inf = std::numeric_limits<double>::infinity();
  TouchExtent out;
  out.extreme = max_projection_avx2(v, nx, ny);
  const double threshold = out.extreme - slack;

  const std::size_t n = v.xs.size();
  const double* xs = v.xs.data();
  const double* ys = v.ys.data();
  const double* ps = v.params.data();
  const __m256d vnx = _mm256_set1_pd(nx);
  const __m256d vny = _mm256_set1_pd(ny);
  const __m256d vthr = _mm256_set1_pd(threshold);
  const __m256d pinf = _mm256_set1_pd(inf);
  const __m256d ninf = _mm256_set1_pd(-inf);
  __m256d lo = pinf;
  __m256d hi = ninf;
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d p = project(xs + i, ys + i, vnx, vny);
    const __m256d mask = _mm256_cmp_pd(p, vthr, _CMP_GE_OQ);
    const __m256d params = _mm256_loadu_pd(ps + i);
    lo = _mm256_min_pd(lo, _mm256_blendv_pd(pinf, params, mask));
    hi = _mm256_max_pd(hi, _mm256_blendv_pd(ninf, params, mask));
    out.count += static_cast<std::size_t>(std::popcount(static_cast<unsigned>(_mm256_movemask_pd(mask))));
  }
  double lo_s = hmin(lo);
  double hi_s = hmax(hi);
  for (; i < n; ++i) {
    const double p = xs[i] * nx + ys[i] * ny;
    if (p >= threshold) {
      lo_s = std::min(lo_s, ps[i]);
      hi_s = std::max(hi_s, ps[i]);
      ++out.count;
    }
  }
  out.min_param = lo_s;
  out.max_param = hi_s;
  return out;
}

}  // namespace arcsupport::simd
