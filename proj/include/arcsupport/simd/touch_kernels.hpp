#pragma once

// Vertex projection kernels behind every brute-force support-line query.
//
// A support line with outward normal n touches the vertices whose projection
// p . n is maximal. The kernels compute that maximum over a structure-of-arrays
// vertex set and the smallest/largest arc parameter among the vertices within
// `slack` of it. The scalar kernel is the reference; vector variants must
// return bit-identical results (no FMA, same operation order per lane).

#include <cstddef>
#include <span>
#include <string_view>

namespace arcsupport::simd {

struct TouchExtent {
  double extreme = 0.0;    // max_i (x_i * nx + y_i * ny)
  double min_param = 0.0;  // smallest param among vertices within slack of extreme
  double max_param = 0.0;
  std::size_t count = 0;   // number of such vertices
};

/// Read-only view of vertex lanes. All spans have the same non-zero length.
struct VertexLanes {
  std::span<const double> xs;
  std::span<const double> ys;
  std::span<const double> params;
};

enum class Isa { scalar, avx2 };

std::string_view to_string(Isa isa) noexcept;

TouchExtent touch_extent_scalar(const VertexLanes& v, double nx, double ny, double slack) noexcept;
/// Call only when avx2_available(). Builds without AVX2 alias the scalar kernel.
TouchExtent touch_extent_avx2(const VertexLanes& v, double nx, double ny, double slack) noexcept;

/// Dispatches to the active ISA.
TouchExtent touch_extent(const VertexLanes& v, double nx, double ny, double slack) noexcept;

/// max_i (x_i * nx + y_i * ny), scalar and dispatched.
double max_projection_scalar(const VertexLanes& v, double nx, double ny) noexcept;
double max_projection_avx2(const VertexLanes& v, double nx, double ny) noexcept;
double max_projection(const VertexLanes& v, double nx, double ny) noexcept;

bool avx2_compiled() noexcept;
bool avx2_available() noexcept;

/// Best ISA supported by the build and the running CPU, unless overridden.
/// ARCSUPPORT_ISA=scalar in the environment forces the scalar path.
Isa active_isa() noexcept;

/// Overrides runtime selection (tests and benchmarks). Requests for an ISA
/// that is not available resolve to scalar.
void set_active_isa(Isa isa) noexcept;

}  // namespace arcsupport::simd
