#include "spin7/torsion.hpp"
#include "spin7/sampling.hpp"

#include <gtest/gtest.h>

#include <fstream>
#include <set>
#include <sstream>

using namespace spin7;

namespace {

const GammaRep &rep() {
  static const GammaRep r;
  return r;
}

const SingletData &singlet() {
  static const SingletData s = extract_singlet(rep());
  return s;
}

} // namespace

TEST(Torsion, GoldenForDx1) {
  std::ifstream in(SPIN7_TEST_DATA "/torsion_dx1.kform");
  const KForm golden = parse_kform(in);
  const TorsionData t = torsion_from_lee(LeeForm(KForm::dx(1)));
  EXPECT_EQ(t.T, golden);
  EXPECT_EQ(t.source, TorsionSource::puhle_formula);
}

TEST(Torsion, LiesInLambda3Eight) {
  RationalSampler s(51);
  for (int n = 0; n < 50; ++n) {
    const TorsionData t = torsion_from_lee(LeeForm(s.nonzero_form(1)));
    EXPECT_TRUE(project3(t.T, Lambda3Part::forty_eight).is_zero());
  }
}

TEST(Torsion, NormRatio) {
  RationalSampler s(52);
  for (int n = 0; n < 20; ++n) {
    const LeeForm theta(s.nonzero_form(1));
    // |J theta|^2 = 7 |theta|^2, scaled by (7/6)^2.
    EXPECT_EQ(torsion_from_lee(theta).T.norm_sq() / theta.form().norm_sq(), Rational(343, 36));
  }
}

TEST(Torsion, IvanovWithZeroDeltaPhiMatchesLeeFormula) {
  RationalSampler s(53);
  const LeeForm theta(s.nonzero_form(1));
  const TorsionData a = ivanov_torsion(KForm(3), theta), b = torsion_from_lee(theta);
  EXPECT_EQ(a.T, b.T);
  EXPECT_EQ(a.source, TorsionSource::ivanov_combiner);
  EXPECT_THROW(ivanov_torsion(KForm(2), theta), Error);
}

TEST(Torsion, IvanovSubtractsDeltaPhi) {
  RationalSampler s(54);
  const LeeForm theta(s.nonzero_form(1));
  const KForm dphi = s.form(3);
  EXPECT_EQ(ivanov_torsion(dphi, theta).T, torsion_from_lee(theta).T - dphi);
}

TEST(Torsion, LeeRoundTrip) {
  RationalSampler s(55);
  for (int n = 0; n < 10; ++n) {
    const KForm theta = s.nonzero_form(1);
    const KForm dphi = Rational(-6, 7) * lambda3_embedding(theta);
    EXPECT_EQ(lee_from_deltaPhi(dphi).form(), Rational(6, 7) * theta);
  }
  EXPECT_TRUE(lee_from_deltaPhi(project3(KForm::blade({1, 2, 3}), Lambda3Part::forty_eight)).is_zero());
}

TEST(Torsion, CliffordProportionalWithFixedConstant) {
  RationalSampler s(56);
  std::set<Rational> ratios;
  for (int n = 0; n < 30; ++n) {
    const TorsionCliffordReport r = torsion_clifford_check(LeeForm(s.nonzero_form(1)), singlet(), rep());
    ASSERT_TRUE(r.proportional);
    ratios.insert(r.ratio);
    EXPECT_FALSE(r.conforms);
  }
  ASSERT_EQ(ratios.size(), 1u);
  EXPECT_EQ(*ratios.begin(), Rational(49, 6));
}

TEST(Torsion, StarThetaPhiOnSinglet) {
  RationalSampler s(57);
  for (int n = 0; n < 10; ++n) {
    const KForm theta = s.nonzero_form(1);
    EXPECT_EQ(clifford_action(lambda3_embedding(theta), rep()) * singlet().epsilon,
              Rational(-7) * (clifford_action(theta, rep()) * singlet().epsilon));
  }
}

TEST(Torsion, ZeroLeeFormIsTriviallyConforming) {
  const TorsionCliffordReport r = torsion_clifford_check(LeeForm(), singlet(), rep());
  EXPECT_TRUE(r.proportional);
  EXPECT_TRUE(r.conforms);
}

TEST(Torsion, OperatorFamily) {
  const LeeForm theta(KForm::dx(3) + Rational(2) * KForm::dx(8));
  const DiracZeroOrderSymbol d = torsion_operator(theta, Rational(12, 7), rep());
  EXPECT_EQ(d.torsion_part, Rational(-1, 2) * clifford_action(theta.form(), rep()));
  EXPECT_EQ(d.eigen_shift, Rational(-3) * SpinorEndo::identity() + d.torsion_part);
}

TEST(Torsion, CancellationOverRandomFamilies) {
  RationalSampler s(58);
  std::vector<Rational> ts;
  for (int n = 0; n < 10; ++n) ts.push_back(s.rational(9, 7));
  for (int n = 0; n < 10; ++n) EXPECT_TRUE(cancellation_check(LeeForm(s.nonzero_form(1)), ts, rep()));
}

TEST(Torsion, LeeFormRejectsWrongGrade) { EXPECT_THROW(LeeForm(KForm(2)), Error); }
