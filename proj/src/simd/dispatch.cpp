#include <atomic>
#include <cstdlib>
#include <string_view>

#include "arcsupport/simd/touch_kernels.hpp"

namespace arcsupport::simd {

#if !defined(ARCSUPPORT_HAVE_AVX2)
double max_projection_avx2(const VertexLanes& v, double nx, double ny) noexcept {
  return max_projection_scalar(v, nx, ny);
}
TouchExtent touch_extent_avx2(const VertexLanes& v, double nx, double ny, double slack) noexcept {
  return touch_extent_scalar(v, nx, ny, slack);
}
#endif

namespace {

Isa detect() noexcept {
  if (const char* forced = std::getenv("ARCSUPPORT_ISA"); forced != nullptr && std::string_view(forced) == "scalar") {
    return Isa::scalar;
  }
  return avx2_available() ? Isa::avx2 : Isa::scalar;
}

std::atomic<Isa>& selected() noexcept {
  static std::atomic<Isa> isa{detect()};
  return isa;
}

}  // namespace

std::string_view to_string(Isa isa) noexcept { return isa == Isa::avx2 ? "avx2" : "scalar"; }

bool avx2_compiled() noexcept {
#if defined(ARCSUPPORT_HAVE_AVX2)
  return true;
#else
  return false;
#endif
}

bool avx2_available() noexcept {
#if defined(ARCSUPPORT_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

Isa active_isa() noexcept { return selected().load(std::memory_order_relaxed); }

void set_active_isa(Isa isa) noexcept {
  if (isa == Isa::avx2 && !avx2_available()) isa = Isa::scalar;
  selected().store(isa, std::memory_order_relaxed);
}

TouchExtent touch_extent(const VertexLanes& v, double nx, double ny, double slack) noexcept {
  return active_isa() == Isa::avx2 ? touch_extent_avx2(v, nx, ny, slack) : touch_extent_scalar(v, nx, ny, slack);
}

double max_projection(const VertexLanes& v, double nx, double ny) noexcept {
  return active_isa() == Isa::avx2 ? max_projection_avx2(v, nx, ny) : max_projection_scalar(v, nx, ny);
}

}  // namespace arcsupport::simd
