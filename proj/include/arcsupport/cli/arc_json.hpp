#pragma once

// JSON and text serialization for the command-line front end.
//
// Arc input:  {"vertices": [[x, y], ...]} in traversal order.

#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "arcsupport/hull.hpp"
#include "arcsupport/pair_finder.hpp"
#include "arcsupport/support_profile.hpp"

namespace arcsupport::cli {

/// File could not be opened, read or written.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parses and validates an arc. Throws Error(MalformedInput) on a schema
/// violation and the build_arc errors on invalid geometry.
PolygonalArc parse_arc_json(std::string_view text, const Tolerances& tol = {});
PolygonalArc load_arc(const std::filesystem::path& path, const Tolerances& tol = {});

nlohmann::json arc_to_json(const PolygonalArc& arc);

/// Angles are emitted in radians unless `degrees` is set.
nlohmann::json profile_to_json(const Hull& hull, const SupportProfile& profile, bool degrees);
nlohmann::json pair_to_json(const TriplePair& pair, std::size_t unique_count, bool degrees);

/// Plain-text analysis report (corner table, widths, level sequence, jumps).
std::string profile_report(const PolygonalArc& arc, const Hull& hull, const SupportProfile& profile, bool degrees);

/// Parses an angle: a decimal number, or a rational multiple of pi such as
/// "pi", "3pi/4", "11*pi/8", "-pi/2". Throws std::invalid_argument.
double parse_angle(std::string_view text);

}  // namespace arcsupport::cli
