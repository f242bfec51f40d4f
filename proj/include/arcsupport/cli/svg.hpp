#pragma once

#include <optional>
#include <string>

#include "arcsupport/hull.hpp"
#include "arcsupport/pair_finder.hpp"

namespace arcsupport::cli {

struct RenderSpec {
  double width = 800.0;   // pixels
  double height = 800.0;
  double margin = 60.0;
  std::string arc_stroke = "#1f4e9c";
  std::string hull_stroke = "#9a9a9a";
  std::string line_stroke = "#c0392b";
  std::string point_fill = "#111111";
  double stroke_width = 2.0;
  double point_radius = 5.0;
  bool labels = true;

  /// Throws std::invalid_argument unless the drawable area is positive.
  void validate() const;
};

/// SVG 1.1 figure: the arc, its hull and, when given, both support lines with
/// the touch points γ(s1), γ(s2), γ(s3). Geometry stays in mathematical
/// orientation; the y axis is flipped only when mapping to the canvas.
std::string render_svg(const PolygonalArc& arc, const Hull& hull, const std::optional<TriplePair>& pair,
                       const RenderSpec& spec = {});

}  // namespace arcsupport::cli
