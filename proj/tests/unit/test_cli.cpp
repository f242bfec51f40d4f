#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <regex>
#include <sstream>

#include <json.hpp>

#include "arcsupport/cli/arc_json.hpp"
#include "arcsupport/cli/commands.hpp"
#include "arcsupport/cli/svg.hpp"
#include "fixtures.hpp"

using namespace arcsupport;
using namespace arcsupport::cli;
using fixtures::kPi;
using nlohmann::json;

namespace {

struct CliRun {
  int code = 0;
  std::string out;
  std::string err;
};

CliRun run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("arcsupport_test_" + name)).string();
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

const std::string kE1 = fixtures::data_path("e1.json");
const std::string kE2 = fixtures::data_path("e2.json");

}  // namespace

TEST(ParseAngle, Forms) {
  EXPECT_EQ(parse_angle("2.5"), 2.5);
  EXPECT_EQ(parse_angle("pi"), kPi);
  EXPECT_EQ(parse_angle("PI"), kPi);
  EXPECT_DOUBLE_EQ(parse_angle("3pi/4"), 3 * kPi / 4);
  EXPECT_DOUBLE_EQ(parse_angle("11*pi/8"), 11 * kPi / 8);
  EXPECT_DOUBLE_EQ(parse_angle("-pi/2"), -kPi / 2);
  EXPECT_DOUBLE_EQ(parse_angle("pi/3"), kPi / 3);
  EXPECT_THROW(parse_angle(""), std::invalid_argument);
  EXPECT_THROW(parse_angle("abc"), std::invalid_argument);
  EXPECT_THROW(parse_angle("2pi4"), std::invalid_argument);
  EXPECT_THROW(parse_angle("pi/0"), std::invalid_argument);
  EXPECT_THROW(parse_angle("1.5x"), std::invalid_argument);
}

TEST(ArcJson, ParseAndRoundTrip) {
  const PolygonalArc a = parse_arc_json(R"({"vertices": [[0,0],[3,0],[3,1],[2,1]]})");
  EXPECT_EQ(a.length(), 5.0);
  const PolygonalArc b = parse_arc_json(arc_to_json(a).dump());
  for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(a.vertices()[i], b.vertices()[i]);
}

TEST(ArcJson, SchemaErrors) {
  for (const char* bad : {"{", "[]", R"({"vertices": 3})", R"({"vertices": [[0,0],[1]]})", R"({"vertices": [[0,"a"],[1,1]]})"}) {
    try {
      parse_arc_json(bad);
      ADD_FAILURE() << bad;
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::MalformedInput) << bad;
    }
  }
}

TEST(CmdAnalyze, E1Report) {
  const CliRun r = run({"analyze", kE1});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("hull corners (counterclockwise): 3"), std::string::npos);
  EXPECT_NE(r.out.find("delta_1 (rad): 2.35619449019"), std::string::npos);
  EXPECT_NE(r.out.find("delta_n (rad): 2.35619449019"), std::string::npos);
  EXPECT_NE(r.out.find("levels from minimum step: 0 1 2"), std::string::npos);
}

TEST(CmdAnalyze, StraightArcExitsTwo) {
  const CliRun r = run({"analyze", fixtures::data_path("straight.json")});
  EXPECT_EQ(r.code, kExitValidation);
  EXPECT_NE(r.err.find("StraightArc"), std::string::npos);
}

TEST(CmdAnalyze, SelfIntersectingExitsTwo) {
  const CliRun r = run({"analyze", fixtures::data_path("crossing.json")});
  EXPECT_EQ(r.code, kExitValidation);
  EXPECT_NE(r.err.find("SelfIntersecting"), std::string::npos);
}

TEST(CmdAnalyze, E2Json) {
  const CliRun r = run({"analyze", kE2, "--json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const json j = json::parse(r.out);
  EXPECT_EQ(j["corners"].size(), 4u);
  EXPECT_NEAR(j["delta_n"].get<double>(), std::atan(0.5), 1e-15);
  EXPECT_NEAR(j["delta_1"].get<double>(), kPi - std::atan(0.5), 1e-15);
  EXPECT_EQ(j["levels"], json({0.0, 3.0, 4.0, 5.0}));
  EXPECT_EQ(j["jumps"].size(), 4u);
}

TEST(CmdAnalyze, DegreesFlag) {
  const CliRun r = run({"--degrees", "analyze", kE1, "--json"});
  ASSERT_EQ(r.code, 0);
  EXPECT_NEAR(json::parse(r.out)["delta_1"].get<double>(), 135.0, 1e-12);
}

TEST(CmdAnalyze, MissingFileExitsFour) {
  EXPECT_EQ(run({"analyze", "/nonexistent/arc.json"}).code, kExitIo);
}

TEST(CmdFindPair, E1BothIdentical) {
  const CliRun r = run({"find-pair", kE1, "--delta", "3.141592653589793", "--mode", "both"});
  ASSERT_EQ(r.code, 0) << r.err;
  const json j = json::parse(r.out);
  EXPECT_TRUE(j["identical"].get<bool>());
  for (const char* m : {"mountain", "valley"}) {
    const double a = j[m]["theta_single"].get<double>();
    const double b = j[m]["theta_double"].get<double>();
    EXPECT_LT(std::min(a, b), kPi / 4 + 1e-9);
    EXPECT_GT(std::min(a, b), kPi / 4 - 1e-9);
    EXPECT_NEAR(std::max(a, b), 5 * kPi / 4, 1e-9);
  }
}

TEST(CmdFindPair, E1ElevenEighthsPiNotStrict) {
  const CliRun r = run({"find-pair", kE1, "--delta", "4.31968990", "--mode", "mountain"});
  ASSERT_EQ(r.code, 0) << r.err;
  const json j = json::parse(r.out);
  EXPECT_FALSE(j["strict"].get<bool>());
  EXPECT_EQ(j["unique_count"].get<int>(), 0);
}

TEST(CmdFindPair, E2Mountain) {
  const CliRun r = run({"find-pair", kE2, "--delta", "pi", "--mode", "mountain"});
  ASSERT_EQ(r.code, 0) << r.err;
  const json j = json::parse(r.out);
  EXPECT_NEAR(j["theta_single"].get<double>(), 0.4636476, 1e-7);
  EXPECT_NEAR(j["theta_double"].get<double>(), 3.6052403, 1e-7);
  EXPECT_EQ(j["s"], json({0.0, 3.0, 5.0}));
  EXPECT_TRUE(j["strict"].get<bool>());
  EXPECT_EQ(j["mode"], "mountain");
  for (const char* key : {"realized_gap", "unique_count", "guaranteed"}) EXPECT_TRUE(j.contains(key)) << key;
}

TEST(CmdFindPair, BelowThresholdReportsUnguaranteed) {
  const CliRun r = run({"find-pair", kE1, "--delta", "pi/2"});
  ASSERT_EQ(r.code, 0) << r.err;
  const json j = json::parse(r.out);
  EXPECT_FALSE(j["guaranteed"].get<bool>());
  EXPECT_FALSE(j["found"].get<bool>());
}

TEST(CmdFindPair, DegreesInAndOut) {
  const CliRun r = run({"--degrees", "find-pair", kE1, "--delta", "180"});
  ASSERT_EQ(r.code, 0) << r.err;
  const json j = json::parse(r.out);
  EXPECT_NEAR(j["theta_single"].get<double>(), 45.0, 1e-9);
  EXPECT_NEAR(j["theta_double"].get<double>(), 225.0, 1e-9);
}

TEST(CmdFindPair, BadDeltaExitsThree) {
  EXPECT_EQ(run({"find-pair", kE1, "--delta", "7"}).code, kExitBadDelta);
  EXPECT_EQ(run({"find-pair", kE1, "--delta", "0"}).code, kExitBadDelta);
  EXPECT_EQ(run({"find-pair", kE1, "--delta", "nonsense"}).code, kExitBadDelta);
}

TEST(CmdFindPair, UsageErrorsExitOne) {
  EXPECT_EQ(run({"find-pair", kE1}).code, kExitUsage);
  EXPECT_EQ(run({"find-pair", kE1, "--delta", "1", "--mode", "sideways"}).code, kExitUsage);
  EXPECT_EQ(run({}).code, kExitUsage);
  EXPECT_EQ(run({"frobnicate"}).code, kExitUsage);
  EXPECT_EQ(run({"--help"}).code, kExitOk);
}

TEST(CmdFindPair, OutputIsDeterministicAndRoundTrips) {
  const CliRun a = run({"find-pair", kE2, "--delta", "2.2", "--mode", "both"});
  const CliRun b = run({"find-pair", kE2, "--delta", "2.2", "--mode", "both"});
  EXPECT_EQ(a.out, b.out);
  const json j = json::parse(a.out);
  const double t = j["mountain"]["theta_double"].get<double>();
  EXPECT_EQ(json::parse(json(t).dump()).get<double>(), t);
}

TEST(CmdRender, E1LinesHaveUnitSlope) {
  const std::string path = temp_path("e1.svg");
  const CliRun r = run({"render", kE1, "--delta", "pi", "-o", path});
  ASSERT_EQ(r.code, 0) << r.err;
  const std::string svg = slurp(path);
  const std::regex line_re(R"re(<line [^>]*x1="([-0-9.]+)" y1="([-0-9.]+)" x2="([-0-9.]+)" y2="([-0-9.]+)")re");
  int lines = 0;
  for (auto it = std::sregex_iterator(svg.begin(), svg.end(), line_re); it != std::sregex_iterator(); ++it) {
    const double x1 = std::stod((*it)[1]), y1 = std::stod((*it)[2]), x2 = std::stod((*it)[3]), y2 = std::stod((*it)[4]);
    // screen y grows downward
    EXPECT_NEAR(-(y2 - y1) / (x2 - x1), std::tan(kPi / 4), 1e-6);
    ++lines;
  }
  EXPECT_EQ(lines, 2);
  for (const char* label : {">s1<", ">s2<", ">s3<", "id=\"arc\"", "id=\"hull\""}) EXPECT_NE(svg.find(label), std::string::npos);
  std::filesystem::remove(path);
}

TEST(CmdRender, E2TouchPointsMarked) {
  const std::string path = temp_path("e2.svg");
  ASSERT_EQ(run({"render", kE2, "--delta", "pi", "-o", path}).code, 0);
  const std::string svg = slurp(path);
  // bbox [0,3]x[0,1] on an 800 canvas with margin 60: scale 680/3
  const double k = 680.0 / 3.0;
  const auto has_circle = [&](double x, double y) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "cx=\"%.6f\" cy=\"%.6f\"", 60 + x * k, 740 - y * k);
    return svg.find(buf) != std::string::npos;
  };
  EXPECT_TRUE(has_circle(0, 0));
  EXPECT_TRUE(has_circle(3, 0));
  EXPECT_TRUE(has_circle(2, 1));
  std::filesystem::remove(path);
}

TEST(CmdRender, MissingOutputDirExitsFour) {
  EXPECT_EQ(run({"render", kE1, "--delta", "pi", "-o", "/nonexistent_dir_xyz/out.svg"}).code, kExitIo);
}

TEST(CmdRender, DegeneratePairStillRenders) {
  const std::string path = temp_path("e1_none.svg");
  const CliRun r = run({"render", kE1, "--delta", "pi/2", "-o", path});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(slurp(path).find("<line"), std::string::npos);
  std::filesystem::remove(path);
}

TEST(RenderSpec, Validate) {
  RenderSpec s;
  EXPECT_NO_THROW(s.validate());
  s.width = 100;
  EXPECT_THROW(s.validate(), std::invalid_argument);
}

TEST(CmdFuzz, SafeRangeSummaryAndDeterministicCsv) {
  const std::string a = temp_path("a.csv"), b = temp_path("b.csv");
  const CliRun r = run({"fuzz", "--trials", "100", "--seed", "42", "--policy", "safe_range", "-o", a});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("strict existence: 200/200"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("verified: 200/200"), std::string::npos);
  EXPECT_NE(r.out.find("anomalies: 0"), std::string::npos);
  ASSERT_EQ(run({"fuzz", "--trials", "100", "--seed", "42", "--policy", "safe_range", "-o", b, "--jobs", "3"}).code, 0);
  EXPECT_EQ(slurp(a), slurp(b));
  EXPECT_FALSE(slurp(a).empty());
  std::filesystem::remove(a);
  std::filesystem::remove(b);
}

TEST(CmdFuzz, FullRangeAnomaliesAreNonStrict) {
  const std::string path = temp_path("full.csv");
  const CliRun r = run({"fuzz", "--trials", "100", "--seed", "42", "--policy", "full_range", "-o", path});
  ASSERT_EQ(r.code, 0) << r.err;
  std::istringstream in(slurp(path));
  std::string line;
  std::getline(in, line);
  int strict_rows = 0;
  while (std::getline(in, line)) {
    std::vector<std::string> cols;
    std::istringstream fields(line);
    for (std::string c; std::getline(fields, c, ',');) cols.push_back(c);
    ASSERT_EQ(cols.size(), 8u) << line;
    if (cols[4] == "true") {
      ++strict_rows;
      EXPECT_EQ(cols[6], "true") << line;
      EXPECT_TRUE(cols[5] == "1" || cols[7] == "true") << line;
    }
  }
  EXPECT_GT(strict_rows, 0);
  std::filesystem::remove(path);
}

TEST(CmdFuzz, FixedPolicyNeedsDelta) {
  EXPECT_EQ(run({"fuzz", "--trials", "2", "--policy", "fixed"}).code, kExitBadDelta);
  EXPECT_EQ(run({"fuzz", "--trials", "2", "--policy", "fixed", "--delta", "9"}).code, kExitBadDelta);
  EXPECT_EQ(run({"fuzz", "--trials", "2", "--policy", "fixed", "--delta", "pi"}).code, 0);
  EXPECT_EQ(run({"fuzz", "--trials", "0"}).code, kExitUsage);
}
