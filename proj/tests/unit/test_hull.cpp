#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "arcsupport/hull.hpp"
#include "arcsupport/oracle.hpp"
#include "fixtures.hpp"

using namespace arcsupport;
using fixtures::kPi;

TEST(MelkmanHull, E1) {
  const PolygonalArc a = fixtures::e1();
  const Hull h = melkman_hull(a);
  ASSERT_EQ(h.corners.size(), 3u);
  EXPECT_EQ(h.corners[0].point, (Point2{0, 0}));
  EXPECT_EQ(h.corners[1].point, (Point2{1, 0}));
  EXPECT_EQ(h.corners[2].point, (Point2{1, 1}));
  EXPECT_EQ(h.corners[0].param, 0.0);
  EXPECT_EQ(h.corners[1].param, 1.0);
  EXPECT_EQ(h.corners[2].param, 2.0);
}

TEST(MelkmanHull, InteriorVertexExcluded) {
  const std::vector<Point2> v{{0, 0}, {1, 0.4}, {2, 0}, {2, 2}};
  const PolygonalArc a = build_arc(v);
  const Hull h = melkman_hull(a);
  ASSERT_EQ(h.corners.size(), 3u);
  const double e = std::hypot(1.0, 0.4);
  EXPECT_EQ(h.corners[0].param, 0.0);
  EXPECT_NEAR(h.corners[1].param, 2 * e, 1e-12);
  EXPECT_NEAR(h.corners[2].param, 2 * e + 2, 1e-12);
  EXPECT_NEAR(h.corners[1].param, 2.1541, 1e-4);
  EXPECT_NEAR(h.corners[2].param, 4.1541, 1e-4);
  EXPECT_EQ(h.corners[1].vertex, 2u);
}

TEST(MelkmanHull, StraightArc) {
  const std::vector<Point2> v{{0, 0}, {1, 0}, {2, 0}};
  const PolygonalArc a = build_arc(v);
  try {
    melkman_hull(a);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::StraightArc);
  }
}

TEST(MelkmanHull, CollinearHullVertexMerged) {
  // (1,0) sits on the bottom edge of the hull and is not a corner.
  const std::vector<Point2> v{{0, 0}, {1, 0}, {2, 0}, {2, 1}, {0.5, 2}};
  const Hull h = melkman_hull(build_arc(v));
  ASSERT_EQ(h.corners.size(), 4u);
  for (const HullCorner& c : h.corners) EXPECT_NE(c.point, (Point2{1, 0}));
}

TEST(MelkmanHull, SpiralThatWrapsAroundItsStart) {
  const std::vector<Point2> v{{0, 0}, {2, 0}, {2, 2}, {-1, 2}, {-1, -1}, {3, -1}};
  const Hull h = melkman_hull(build_arc(v));
  ASSERT_EQ(h.corners.size(), 4u);
  EXPECT_EQ(h.corners[0].point, (Point2{2, 2}));
}

TEST(CornerSteps, E1) {
  const Hull h = build_hull(fixtures::e1());
  EXPECT_NEAR(h.corners[1].step.lo, 0.0, 1e-15);
  EXPECT_NEAR(h.corners[1].step.hi, kPi / 2, 1e-15);
  EXPECT_NEAR(h.corners[1].exterior_angle, kPi / 2, 1e-15);
  EXPECT_NEAR(h.corners[2].step.lo, kPi / 2, 1e-15);
  EXPECT_NEAR(h.corners[2].step.hi, 5 * kPi / 4, 1e-15);
  EXPECT_NEAR(h.corners[2].exterior_angle, 3 * kPi / 4, 1e-15);
  EXPECT_NEAR(h.corners[0].step.lo, 5 * kPi / 4, 1e-15);
  EXPECT_NEAR(h.corners[0].step.hi, 2 * kPi, 1e-15);
  EXPECT_NEAR(h.corners[0].exterior_angle, 3 * kPi / 4, 1e-15);
}

class HullProperties : public ::testing::TestWithParam<std::uint64_t> {};

TEST_P(HullProperties, InvariantsOnRandomArcs) {
  FuzzConfig cfg;
  cfg.seed = GetParam();
  for (std::uint64_t t = 0; t < 100; ++t) {
    const PolygonalArc a = random_simple_arc(cfg, t);
    const Hull h = build_hull(a);
    const std::size_t n = h.corners.size();
    ASSERT_GE(n, 3u);

    double total = 0;
    for (std::size_t i = 0; i < n; ++i) {
      const HullCorner& c = h.corners[i];
      const HullCorner& d = h.corners[(i + 1) % n];
      EXPECT_GT(c.exterior_angle, a.tolerances().eps_angle);
      EXPECT_LT(c.exterior_angle, kPi);
      EXPECT_NEAR(c.step.length(), c.exterior_angle, 1e-15);
      // consecutive steps share an endpoint
      EXPECT_LT(fixtures::angle_diff(c.step.hi, d.step.lo), 1e-12);
      total += c.exterior_angle;
      for (const Point2& p : a.vertices()) EXPECT_GE(orient(c.point, d.point, p, a.tolerances(), a.diagonal()), 0);
    }
    EXPECT_NEAR(total, 2 * kPi, static_cast<double>(n) * 1e-9);
    for (std::size_t i = 1; i < n; ++i) EXPECT_GT(h.corners[i].param, h.corners[0].param);

    const std::vector<std::size_t> ref = monotone_chain_hull(a.vertices(), a.tolerances());
    ASSERT_EQ(ref.size(), n);
    for (std::size_t i = 0; i < n; ++i) EXPECT_EQ(ref[i], h.corners[i].vertex);
  }
}

INSTANTIATE_TEST_SUITE_P(Seeds, HullProperties, ::testing::Values(1u, 42u, 977u));
