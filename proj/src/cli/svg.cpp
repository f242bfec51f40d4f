#include "arcsupport/cli/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace arcsupport::cli {

void RenderSpec::validate() const {
  if (!(width > 2.0 * margin) || !(height > 2.0 * margin) || !(margin >= 0.0)) {
    throw std::invalid_argument("render canvas must be larger than twice the margin");
  }
}

namespace {

class Canvas {
 public:
  Canvas(const PolygonalArc& arc, const RenderSpec& spec) : spec_(spec) {
    const auto v = arc.vertices();
    min_ = max_ = v.front();
    for (const Point2& p : v) {
      min_ = {std::min(min_.x, p.x), std::min(min_.y, p.y)};
      max_ = {std::max(max_.x, p.x), std::max(max_.y, p.y)};
    }
    const double w = std::max(max_.x - min_.x, 1e-12);
    const double h = std::max(max_.y - min_.y, 1e-12);
    scale_ = std::min((spec.width - 2.0 * spec.margin) / w, (spec.height - 2.0 * spec.margin) / h);
  }

  // Mathematical -> canvas coordinates (y flipped here and nowhere else).
  Point2 map(Point2 p) const noexcept {
    return {spec_.margin + (p.x - min_.x) * scale_, spec_.height - spec_.margin - (p.y - min_.y) * scale_};
  }

 private:
  const RenderSpec& spec_;
  Point2 min_;
  Point2 max_;
  double scale_ = 1.0;
};

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

}  // namespace

std::string render_svg(const PolygonalArc& arc, const Hull& hull, const std::optional<TriplePair>& pair,
                       const RenderSpec& spec) {
  spec.validate();
  const Canvas canvas(arc, spec);
  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << fmt(spec.width) << "\" height=\""
     << fmt(spec.height) << "\" viewBox=\"0 0 " << fmt(spec.width) << ' ' << fmt(spec.height) << "\">\n";
  os << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  os << "  <polygon id=\"hull\" fill=\"none\" stroke=\"" << spec.hull_stroke << "\" stroke-dasharray=\"6 4\" stroke-width=\""
     << fmt(spec.stroke_width * 0.5) << "\" points=\"";
  for (const HullCorner& c : hull.corners) {
    const Point2 q = canvas.map(c.point);
    os << fmt(q.x) << ',' << fmt(q.y) << ' ';
  }
  os << "\"/>\n";

  os << "  <polyline id=\"arc\" fill=\"none\" stroke=\"" << spec.arc_stroke << "\" stroke-width=\"" << fmt(spec.stroke_width)
     << "\" points=\"";
  for (const Point2& p : arc.vertices()) {
    const Point2 q = canvas.map(p);
    os << fmt(q.x) << ',' << fmt(q.y) << ' ';
  }
  os << "\"/>\n";

  if (pair) {
    const double reach = 2.0 * arc.diagonal();
    auto line = [&](const DirectedLine& l, const char* id) {
      const Point2 d = l.theta.direction();
      const Point2 a = canvas.map(l.anchor - reach * d);
      const Point2 b = canvas.map(l.anchor + reach * d);
      os << "  <line id=\"" << id << "\" x1=\"" << fmt(a.x) << "\" y1=\"" << fmt(a.y) << "\" x2=\"" << fmt(b.x) << "\" y2=\""
         << fmt(b.y) << "\" stroke=\"" << spec.line_stroke << "\" stroke-width=\"" << fmt(spec.stroke_width) << "\"/>\n";
    };
    line(pair->double_line, "double-line");
    line(pair->single_line, "single-line");

    const double params[3] = {pair->s1, pair->s2, pair->s3};
    const char* names[3] = {"s1", "s2", "s3"};
    for (int i = 0; i < 3; ++i) {
      const Point2 q = canvas.map(point_at(arc, params[i]));
      os << "  <circle id=\"touch-" << names[i] << "\" cx=\"" << fmt(q.x) << "\" cy=\"" << fmt(q.y) << "\" r=\""
         << fmt(spec.point_radius) << "\" fill=\"" << spec.point_fill << "\"/>\n";
      if (spec.labels) {
        os << "  <text x=\"" << fmt(q.x + 1.6 * spec.point_radius) << "\" y=\"" << fmt(q.y - 1.6 * spec.point_radius)
           << "\" font-family=\"sans-serif\" font-size=\"14\">" << names[i] << "</text>\n";
      }
    }
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace arcsupport::cli
