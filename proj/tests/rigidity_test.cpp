#include "spin7/rigidity.hpp"
#include "spin7/sampling.hpp"

#include <gtest/gtest.h>

#include <sstream>

using namespace spin7;

TEST(Rigidity, CatalogScalarCurvatures) {
  EXPECT_EQ(scalar_curvature(6, 42, 0), Rational(77, 6));
  EXPECT_EQ(scalar_curvature(6, 24, 0), Rational(43, 3));
  // 49/3 - 7/2 and 49/3 - 2
  EXPECT_EQ(Rational(49, 3) - Rational(7, 2), Rational(77, 6));
  EXPECT_EQ(Rational(49, 3) - Rational(2), Rational(43, 3));
  for (const auto &g : catalog())
    EXPECT_EQ(scalar_curvature(g.theta_norm_sq, g.torsion_norm_sq, g.delta_theta), *g.expected_scal);
}

TEST(Rigidity, ScalarCurvatureIsAffine) {
  RationalSampler s(61);
  for (int n = 0; n < 20; ++n) {
    const Rational a = abs(s.rational()), b = abs(s.rational()), c = s.rational();
    EXPECT_EQ(scalar_curvature(a, b, c) - scalar_curvature(0, 0, 0),
              scalar_curvature(a, 0, 0) + scalar_curvature(0, b, 0) + scalar_curvature(0, 0, c));
  }
  EXPECT_EQ(scalar_curvature(18, 0, 0), Rational(49));
  EXPECT_EQ(scalar_curvature(0, 12, 0), Rational(-1));
  EXPECT_EQ(scalar_curvature(0, 0, 2), Rational(7));
  EXPECT_THROW(scalar_curvature(-1, 0, 0), Error);
  EXPECT_THROW(scalar_curvature(0, -1, 0), Error);
}

TEST(Rigidity, FlatThresholdAndBoundarySamples) {
  EXPECT_EQ(flat_instanton_threshold(), Rational(36));
  RationalSampler s(62);
  int rigid = 0;
  for (int n = 0; n < 100; ++n) {
    const Rational scal = Rational(36) + Rational(static_cast<long>(s.next(41)) - 20, static_cast<long>(s.next(8)) + 1);
    const bool v = rigidity_verdict(0, scal).rigid;
    EXPECT_EQ(v, scal > Rational(36)) << scal;
    rigid += v;
  }
  EXPECT_GT(rigid, 0);
  EXPECT_LT(rigid, 100);
  EXPECT_FALSE(rigidity_verdict(0, 36).rigid);
}

TEST(Rigidity, VerdictFields) {
  const RigidityVerdict v = rigidity_verdict(Rational(1, 2), Rational(77, 6));
  EXPECT_EQ(v.threshold, Rational(139, 24));
  EXPECT_EQ(v.margin, Rational(1, 2) - Rational(139, 24));
  EXPECT_FALSE(v.rigid);
}

TEST(Rigidity, CatalogMarginsAndVerdicts) {
  const auto cat = catalog();
  ASSERT_EQ(cat.size(), 2u);
  EXPECT_EQ(flat_verdict(cat[0]).margin, Rational(-139, 24));
  EXPECT_EQ(flat_verdict(cat[1]).margin, Rational(-65, 12));
  for (const auto &g : cat) EXPECT_FALSE(flat_verdict(g).rigid);
}

TEST(Rigidity, VerdictIsMonotone) {
  RationalSampler s(63);
  for (int n = 0; n < 50; ++n) {
    const Rational lam = s.rational(40, 3), scal = s.rational(60, 5), bump = abs(s.nonzero_rational());
    if (rigidity_verdict(lam, scal).rigid) {
      EXPECT_TRUE(rigidity_verdict(lam + bump, scal).rigid);
      EXPECT_TRUE(rigidity_verdict(lam, scal + bump).rigid);
    }
  }
}

TEST(Rigidity, Admissibility) {
  // p1^2 - 4 p2 + 8 chi and p1^2 - 4 p2 - 8 chi.
  EXPECT_TRUE(admissibility({0, 0, 0}, OrientationSign::plus));
  // 4 - 12 + 8 = 0, 4 - 12 - 8 = -16
  EXPECT_TRUE(admissibility({4, 3, 1}, OrientationSign::plus));
  EXPECT_FALSE(admissibility({4, 3, 1}, OrientationSign::minus));
  // 20 - 12 - 8 = 0
  EXPECT_TRUE(admissibility({20, 3, 1}, OrientationSign::minus));
}

TEST(Rigidity, ParseCatalog) {
  std::istringstream in("# name theta T dtheta\nX 6 24 0 43/3\n\nY 1/2 3 -1\n");
  const auto recs = parse_catalog(in);
  ASSERT_EQ(recs.size(), 2u);
  EXPECT_EQ(recs[0].name, "X");
  EXPECT_EQ(*recs[0].expected_scal, Rational(43, 3));
  EXPECT_FALSE(recs[1].expected_scal.has_value());
  EXPECT_EQ(recs[1].theta_norm_sq, Rational(1, 2));
}

TEST(Rigidity, ParseCatalogErrors) {
  auto line_of = [](const std::string &text) -> std::size_t {
    std::istringstream in(text);
    try {
      parse_catalog(in);
    } catch (const ParseError &e) {
      return e.line();
    }
    return 0;
  };
  EXPECT_EQ(line_of("A 1 2\n"), 1u);
  EXPECT_EQ(line_of("# c\nA 1 2 q\n"), 2u);
  EXPECT_EQ(line_of("A 1 2 3\nB -1 2 3\n"), 2u);
  EXPECT_EQ(line_of("A 1 2 3 4 5\n"), 1u);
  EXPECT_EQ(line_of("A 1 2 3\n"), 0u);
}
