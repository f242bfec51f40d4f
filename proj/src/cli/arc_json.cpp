#include "arcsupport/cli/arc_json.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <vector>

namespace arcsupport::cli {
namespace {

double out_angle(double radians, bool degrees) { return degrees ? radians * 180.0 / kPi : radians; }

double parse_number(std::string_view text) {
  const std::string s(text);
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    throw std::invalid_argument("not a number: '" + s + "'");
  }
  if (used != s.size() || !std::isfinite(v)) throw std::invalid_argument("not a number: '" + s + "'");
  return v;
}

}  // namespace

double parse_angle(std::string_view text) {
  std::string s;
  for (char c : text) {
    if (c != ' ') s.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  }
  if (s.empty()) throw std::invalid_argument("empty angle");
  const std::size_t at = s.find("pi");
  if (at == std::string::npos) return parse_number(s);

  std::string coef = s.substr(0, at);
  if (!coef.empty() && coef.back() == '*') coef.pop_back();
  double k = 1.0;
  if (coef == "-") {
    k = -1.0;
  } else if (!coef.empty() && coef != "+") {
    k = parse_number(coef);
  }
  const std::string rest = s.substr(at + 2);
  double denom = 1.0;
  if (!rest.empty()) {
    if (rest.front() != '/') throw std::invalid_argument("unexpected text after pi: '" + rest + "'");
    denom = parse_number(rest.substr(1));
    if (denom == 0.0) throw std::invalid_argument("division by zero");
  }
  return k * kPi / denom;
}

PolygonalArc parse_arc_json(std::string_view text, const Tolerances& tol) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorKind::MalformedInput, std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("vertices") || !doc["vertices"].is_array()) {
    throw Error(ErrorKind::MalformedInput, "expected an object with a \"vertices\" array");
  }
  std::vector<Point2> pts;
  for (const auto& v : doc["vertices"]) {
    if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number()) {
      throw Error(ErrorKind::MalformedInput, "each vertex must be [x, y]");
    }
    pts.push_back({v[0].get<double>(), v[1].get<double>()});
  }
  return build_arc(pts, tol);
}

PolygonalArc load_arc(const std::filesystem::path& path, const Tolerances& tol) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw IoError("cannot read " + path.string());
  return parse_arc_json(buf.str(), tol);
}

nlohmann::json arc_to_json(const PolygonalArc& arc) {
  nlohmann::json verts = nlohmann::json::array();
  for (const Point2& p : arc.vertices()) verts.push_back({p.x, p.y});
  return {{"vertices", verts}};
}

nlohmann::json profile_to_json(const Hull& hull, const SupportProfile& profile, bool degrees) {
  nlohmann::json corners = nlohmann::json::array();
  for (const HullCorner& c : hull.corners) {
    corners.push_back({{"point", {c.point.x, c.point.y}},
                       {"param", c.param},
                       {"vertex", c.vertex},
                       {"step", {out_angle(c.step.lo, degrees), out_angle(c.step.hi, degrees)}},
                       {"exterior_angle", out_angle(c.exterior_angle, degrees)}});
  }
  nlohmann::json jumps = nlohmann::json::array();
  for (const Jump& j : profile.jumps()) {
    jumps.push_back({{"angle", out_angle(j.angle, degrees)}, {"span", {j.span.lo, j.span.hi}}});
  }
  return {{"units", degrees ? "degrees" : "radians"},
          {"corners", corners},
          {"delta_1", out_angle(profile.delta_1(), degrees)},
          {"delta_n", out_angle(profile.delta_n(), degrees)},
          {"min_step", profile.min_step()},
          {"apex_step", profile.apex_step()},
          {"levels", profile.levels_from_min()},
          {"jumps", jumps}};
}

nlohmann::json pair_to_json(const TriplePair& pair, std::size_t unique_count, bool degrees) {
  return {{"mode", std::string(to_string(pair.mode))},
          {"found", true},
          {"theta_single", out_angle(pair.theta_single, degrees)},
          {"theta_double", out_angle(pair.theta_double, degrees)},
          {"s", {pair.s1, pair.s2, pair.s3}},
          {"strict", pair.strict},
          {"requested_delta", out_angle(pair.requested_delta, degrees)},
          {"realized_gap", out_angle(pair.realized_gap, degrees)},
          {"unique_count", unique_count},
          {"guaranteed", pair.guaranteed},
          {"near_tie", pair.near_tie}};
}

std::string profile_report(const PolygonalArc& arc, const Hull& hull, const SupportProfile& profile, bool degrees) {
  std::ostringstream os;
  os << std::setprecision(12);
  const char* unit = degrees ? "deg" : "rad";
  os << "arc: " << arc.size() << " vertices, length " << arc.length() << "\n";
  os << "hull corners (counterclockwise): " << hull.corners.size() << "\n";
  char line[256];
  std::snprintf(line, sizeof line, "  %3s %14s %14s %14s %16s %16s %14s\n", "#", "x", "y", "param", "step_start", "step_end",
                "exterior");
  os << line;
  for (std::size_t i = 0; i < hull.corners.size(); ++i) {
    const HullCorner& c = hull.corners[i];
    std::snprintf(line, sizeof line, "  %3zu %14.9g %14.9g %14.9g %16.12g %16.12g %14.12g\n", i, c.point.x, c.point.y, c.param,
                  out_angle(c.step.lo, degrees), out_angle(c.step.hi, degrees), out_angle(c.exterior_angle, degrees));
    os << line;
  }
  os << "delta_1 (" << unit << "): " << out_angle(profile.delta_1(), degrees) << "\n";
  os << "delta_n (" << unit << "): " << out_angle(profile.delta_n(), degrees) << "\n";
  os << "levels from minimum step:";
  for (double l : profile.levels_from_min()) os << ' ' << l;
  os << "\njumps:\n";
  for (const Jump& j : profile.jumps()) {
    os << "  angle " << out_angle(j.angle, degrees) << " " << unit << "  span [" << j.span.lo << ", " << j.span.hi << "]\n";
  }
  return os.str();
}

}  // namespace arcsupport::cli
