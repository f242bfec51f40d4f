#include "arcsupport/cli/commands.hpp"

#include <fstream>
#include <optional>
#include <ostream>

#include <CLI11.hpp>

#include "arcsupport/cli/arc_json.hpp"
#include "arcsupport/cli/svg.hpp"
#include "arcsupport/fuzz.hpp"

namespace arcsupport::cli {
namespace {

struct Options {
  bool degrees = false;
  bool json = false;
  std::string input;
  std::string delta_text;
  std::string mode = "mountain";
  std::string output;
  std::size_t trials = 100;
  std::uint64_t seed = 42;
  std::string policy = "safe_range";
  std::size_t jobs = 1;
};

class BadDelta : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

double read_delta(const Options& o) {
  double v = 0.0;
  try {
    v = parse_angle(o.delta_text);
  } catch (const std::invalid_argument& e) {
    throw BadDelta(std::string("cannot parse --delta: ") + e.what());
  }
  return o.degrees ? v * kPi / 180.0 : v;
}

ScanMode parse_mode(const std::string& m) { return m == "valley" ? ScanMode::valley : ScanMode::mountain; }

nlohmann::json pair_result(const SupportProfile& profile, const PolygonalArc& arc, double delta, ScanMode mode,
                           bool degrees) {
  const std::size_t unique = count_shaped(enumerate_triples(profile, arc, delta), mode);
  try {
    return pair_to_json(find_pair(profile, arc, delta, mode), unique, degrees);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::NotFound) throw;
    return {{"mode", std::string(to_string(mode))},
            {"found", false},
            {"strict", false},
            {"guaranteed", false},
            {"requested_delta", degrees ? delta * 180.0 / kPi : delta},
            {"unique_count", unique}};
  }
}

int cmd_analyze(const Options& o, std::ostream& out) {
  const PolygonalArc arc = load_arc(o.input);
  const Hull hull = build_hull(arc);
  const SupportProfile profile = build_profile(hull, arc);
  if (o.json) {
    out << profile_to_json(hull, profile, o.degrees).dump(2) << '\n';
  } else {
    out << profile_report(arc, hull, profile, o.degrees);
  }
  return kExitOk;
}

int cmd_find_pair(const Options& o, std::ostream& out) {
  const PolygonalArc arc = load_arc(o.input);
  const SupportProfile profile = build_profile(arc);
  const double delta = read_delta(o);
  nlohmann::json result;
  if (o.mode == "both") {
    const nlohmann::json m = pair_result(profile, arc, delta, ScanMode::mountain, o.degrees);
    const nlohmann::json v = pair_result(profile, arc, delta, ScanMode::valley, o.degrees);
    bool identical = false;
    if (m["found"].get<bool>() && v["found"].get<bool>()) {
      identical = same_pair(find_pair(profile, arc, delta, ScanMode::mountain),
                            find_pair(profile, arc, delta, ScanMode::valley), profile);
    }
    result = {{"mode", "both"}, {"identical", identical}, {"mountain", m}, {"valley", v}};
  } else {
    result = pair_result(profile, arc, delta, parse_mode(o.mode), o.degrees);
  }
  out << result.dump(2) << '\n';
  return kExitOk;
}

int cmd_render(const Options& o, std::ostream& out) {
  const PolygonalArc arc = load_arc(o.input);
  const Hull hull = build_hull(arc);
  const SupportProfile profile = build_profile(hull, arc);
  std::optional<TriplePair> pair;
  if (!o.delta_text.empty()) {
    const double delta = read_delta(o);
    try {
      pair = find_pair(profile, arc, delta, parse_mode(o.mode));
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::NotFound) throw;
    }
  }
  const std::string svg = render_svg(arc, hull, pair);
  std::ofstream file(o.output, std::ios::binary);
  if (!file) throw IoError("cannot write " + o.output);
  file << svg;
  file.close();
  if (!file) throw IoError("cannot write " + o.output);
  out << "wrote " << o.output << (pair ? "" : " (no pair drawn)") << '\n';
  return kExitOk;
}

int cmd_fuzz(const Options& o, std::ostream& out) {
  FuzzConfig config;
  config.trials = o.trials;
  config.seed = o.seed;
  if (o.policy == "full_range") {
    config.delta_policy.kind = DeltaPolicy::Kind::full_range;
  } else if (o.policy == "fixed") {
    if (o.delta_text.empty()) throw BadDelta("--policy fixed requires --delta");
    config.delta_policy.kind = DeltaPolicy::Kind::fixed;
    config.delta_policy.value = read_delta(o);
    if (!(config.delta_policy.value > 0.0 && config.delta_policy.value < kTwoPi)) {
      throw Error(ErrorKind::InvalidDelta, "delta must lie in (0, 2pi)");
    }
  }
  const FuzzReport report = run_campaign(config, o.jobs);
  if (!o.output.empty()) {
    std::ofstream file(o.output, std::ios::binary);
    if (!file) throw IoError("cannot write " + o.output);
    write_csv(file, report);
    file.close();
    if (!file) throw IoError("cannot write " + o.output);
  }
  out << summarize(report);
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Support lines with triple touch points on polygonal arcs"};
  app.require_subcommand(1);
  app.add_flag("--degrees", o.degrees, "Read and print angles in degrees");

  auto* analyze = app.add_subcommand("analyze", "Hull corners, step widths, levels and jumps of T");
  analyze->add_option("input", o.input, "Arc JSON file")->required();
  analyze->add_flag("--json", o.json, "Machine-readable output");

  const std::vector<std::string> modes{"mountain", "valley"};
  const std::vector<std::string> modes_both{"mountain", "valley", "both"};

  auto* find = app.add_subcommand("find-pair", "Pair of support lines at gap delta");
  find->add_option("input", o.input, "Arc JSON file")->required();
  find->add_option("--delta", o.delta_text, "Angle in radians, e.g. 2.5 or 3pi/4")->required();
  find->add_option("--mode", o.mode, "mountain, valley or both")->check(CLI::IsMember(modes_both));

  auto* render = app.add_subcommand("render", "SVG figure of the arc, hull and pair");
  render->add_option("input", o.input, "Arc JSON file")->required();
  render->add_option("--delta", o.delta_text, "Angle in radians");
  render->add_option("--mode", o.mode, "mountain or valley")->check(CLI::IsMember(modes));
  render->add_option("-o,--output", o.output, "Output SVG path")->required();

  auto* fuzz = app.add_subcommand("fuzz", "Seeded campaign over random arcs");
  fuzz->add_option("--trials", o.trials, "Number of arcs")->check(CLI::PositiveNumber);
  fuzz->add_option("--seed", o.seed, "Campaign seed");
  fuzz->add_option("--policy", o.policy, "safe_range, full_range or fixed")
      ->check(CLI::IsMember({"safe_range", "full_range", "fixed"}));
  fuzz->add_option("--delta", o.delta_text, "Delta for the fixed policy");
  fuzz->add_option("-o,--output", o.output, "CSV report path");
  fuzz->add_option("--jobs", o.jobs, "Worker threads")->check(CLI::NonNegativeNumber);

  std::vector<std::string> storage{"arcsupport"};
  storage.insert(storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (std::string& s : storage) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*analyze) return cmd_analyze(o, out);
    if (*find) return cmd_find_pair(o, out);
    if (*render) return cmd_render(o, out);
    return cmd_fuzz(o, out);
  } catch (const IoError& e) {
    err << "IoError: " << e.what() << '\n';
    return kExitIo;
  } catch (const BadDelta& e) {
    err << "InvalidDelta: " << e.what() << '\n';
    return kExitBadDelta;
  } catch (const Error& e) {
    err << e.what() << '\n';
    switch (e.kind()) {
      case ErrorKind::InvalidDelta:
        return kExitBadDelta;
      case ErrorKind::GenerationExhausted:
        return kExitGeneration;
      default:
        return kExitValidation;
    }
  } catch (const std::invalid_argument& e) {
    err << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace arcsupport::cli
