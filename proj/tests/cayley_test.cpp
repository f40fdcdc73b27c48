#include "spin7/cayley.hpp"
#include "spin7/polynomial.hpp"
#include "spin7/sampling.hpp"

#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

using namespace spin7;

namespace {

std::string read_file(const std::string &path) {
  std::ifstream in(path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

KForm seven_sample() { return KForm::blade({1, 2}) + KForm::blade({3, 4}) + KForm::blade({5, 6}) + KForm::blade({7, 8}); }

} // namespace

TEST(KForm, WedgeSignsAndGrades) {
  EXPECT_EQ(wedge(KForm::dx(1), KForm::dx(2)), KForm::blade({1, 2}));
  EXPECT_EQ(wedge(KForm::dx(2), KForm::dx(1)), KForm::blade({1, 2}, -1));
  EXPECT_TRUE(wedge(KForm::dx(3), KForm::dx(3)).is_zero());
  EXPECT_EQ(wedge(KForm::blade({2, 4}), KForm::blade({1, 3})), KForm::blade({1, 2, 3, 4}, -1));
  EXPECT_THROW(wedge(KForm::blade({1, 2, 3, 4, 5}), KForm::blade({6, 7, 8, 1})), Error);
}

TEST(KForm, WedgeGradedCommutativity) {
  RationalSampler s(31);
  for (int n = 0; n < 30; ++n) {
    const int p = static_cast<int>(s.next(5)), q = static_cast<int>(s.next(4));
    const KForm a = s.form(p), b = s.form(q);
    const Rational sign = (p * q) % 2 ? -1 : 1;
    EXPECT_EQ(wedge(a, b), sign * wedge(b, a));
  }
}

TEST(KForm, HodgeExamples) {
  EXPECT_EQ(hodge_star(KForm::scalar(1)), KForm::volume());
  EXPECT_EQ(hodge_star(KForm::volume()), KForm::scalar(1));
  EXPECT_EQ(hodge_star(KForm::dx(1)), KForm::blade({2, 3, 4, 5, 6, 7, 8}));
  EXPECT_EQ(hodge_star(KForm::dx(2)), KForm::blade({1, 3, 4, 5, 6, 7, 8}, -1));
}

TEST(KForm, HodgeDefiningIdentity) {
  RationalSampler s(32);
  for (int k = 0; k <= 8; ++k)
    for (int n = 0; n < 4; ++n) {
      const KForm a = s.form(k), b = s.form(k);
      EXPECT_EQ(wedge(a, hodge_star(b)), a.inner(b) * KForm::volume());
    }
}

TEST(KForm, StarStarSignAndIsometry) {
  RationalSampler s(33);
  for (int k = 0; k <= 8; ++k) {
    const KForm f = s.form(k);
    EXPECT_EQ(hodge_star(hodge_star(f)), Rational(k % 2 ? -1 : 1) * f) << k;
    EXPECT_EQ(hodge_star(f).norm_sq(), f.norm_sq());
  }
}

TEST(KForm, FormatParseRoundTrip) {
  RationalSampler s(34);
  for (int k = 0; k <= 8; ++k) {
    const KForm f = s.form(k);
    EXPECT_EQ(parse_kform(format_kform(f)), f);
  }
  EXPECT_EQ(format_kform(KForm::blade({1, 2}, Rational(-3, 6))), "grade 2\n1 2  -1/2\n");
}

TEST(KForm, ParseCommentsAndBlankLines) {
  const KForm f = parse_kform("# header\n\ngrade 3\n  # x\n1 2 3 1/2\n\n4 5 6 -2\n");
  EXPECT_EQ(f, Rational(1, 2) * KForm::blade({1, 2, 3}) - Rational(2) * KForm::blade({4, 5, 6}));
}

TEST(KForm, ParseErrorsCarryLineNumbers) {
  auto line_of = [](const std::string &text) -> std::size_t {
    try {
      parse_kform(text);
    } catch (const ParseError &e) {
      return e.line();
    }
    return 0;
  };
  EXPECT_EQ(line_of("1 2 1\n"), 1u);
  EXPECT_EQ(line_of("grade 9\n"), 1u);
  EXPECT_EQ(line_of("grade 2\n1 2 x\n"), 2u);
  EXPECT_EQ(line_of("# c\ngrade 2\n1 2 1\n2 1 1\n"), 4u);
  EXPECT_EQ(line_of("grade 2\n1 9 1\n"), 2u);
  EXPECT_EQ(line_of("grade 2\n1 2 1\n\n1 2 3\n"), 4u);
  EXPECT_EQ(line_of("grade 2\n1 2 3 4\n"), 2u);
  EXPECT_EQ(line_of("grade 2\n1 2 1/0\n"), 2u);
  EXPECT_THROW(parse_kform(""), ParseError);
}

TEST(Cayley, FourteenSignedTerms) {
  const KForm &phi = cayley_form();
  EXPECT_EQ(phi.grade(), 4);
  EXPECT_EQ(phi.size(), 14u);
  EXPECT_EQ(format_kform(phi), read_file(SPIN7_TEST_DATA "/cayley.kform"));
}

TEST(Cayley, SelfDualWithNormFourteen) {
  EXPECT_EQ(hodge_star(cayley_form()), cayley_form());
  EXPECT_EQ(cayley_form().norm_sq(), Rational(14));
  EXPECT_EQ(wedge(cayley_form(), cayley_form()), Rational(14) * KForm::volume());
}

TEST(Cayley, Lambda2OperatorMinimalPolynomial) {
  const RatMatrix &L = lambda2_projectors().L;
  const RatMatrix id = RatMatrix::identity(28);
  // (L - 3)(L + 1) = 0 and neither factor alone vanishes.
  EXPECT_TRUE((L * L - Rational(2) * L - Rational(3) * id).is_zero());
  EXPECT_FALSE((L - Rational(3) * id).is_zero());
  EXPECT_FALSE((L + id).is_zero());
  EXPECT_EQ(L.trace(), Rational(3 * 7 - 21));
  EXPECT_EQ(L.transpose(), L);
}

TEST(Cayley, Lambda2Spectrum) {
  auto eig = rational_eigendecomposition(lambda2_projectors().L);
  ASSERT_EQ(eig.size(), 2u);
  EXPECT_EQ(eig[0].value, Rational(-1));
  EXPECT_EQ(eig[0].multiplicity, 21u);
  EXPECT_EQ(eig[1].value, Rational(3));
  EXPECT_EQ(eig[1].multiplicity, 7u);
  for (const auto &v : eig[0].basis) {
    const KForm a = KForm::from_vector(2, v);
    EXPECT_EQ(hodge_star(wedge(a, cayley_form())), -a);
  }
}

TEST(Cayley, Lambda2Projectors) {
  const auto &s = lambda2_projectors();
  EXPECT_EQ(rank(s.pi7), 7u);
  EXPECT_EQ(rank(s.pi21), 21u);
  EXPECT_EQ(s.pi7 * s.pi7, s.pi7);
  EXPECT_EQ(s.pi21 * s.pi21, s.pi21);
  EXPECT_TRUE((s.pi7 * s.pi21).is_zero());
  EXPECT_EQ(s.pi7 + s.pi21, RatMatrix::identity(28));
}

TEST(Cayley, Lambda2Examples) {
  EXPECT_EQ(lambda2_operator(seven_sample()), Rational(3) * seven_sample());
  const KForm a21 = KForm::blade({1, 2}) - KForm::blade({3, 4});
  EXPECT_EQ(lambda2_operator(a21), -a21);
  EXPECT_TRUE(project2(a21, Lambda2Part::seven).is_zero());
  EXPECT_EQ(project2(KForm::blade({1, 2}), Lambda2Part::seven), Rational(1, 4) * seven_sample());
  EXPECT_THROW(project2(KForm::dx(1), Lambda2Part::seven), Error);
}

TEST(Cayley, Lambda3EmbeddingGolden) {
  EXPECT_EQ(format_kform(lambda3_embedding(KForm::dx(1))), read_file(SPIN7_TEST_DATA "/j_dx1.kform"));
}

TEST(Cayley, Lambda3GramAndProjectors) {
  const auto &s = lambda3_projectors();
  EXPECT_EQ(s.gram_scalar, Rational(7));
  EXPECT_EQ(s.gram, Rational(7) * RatMatrix::identity(8));
  EXPECT_EQ(rank(s.pi8), 8u);
  EXPECT_EQ(rank(s.pi48), 48u);
  EXPECT_EQ(s.pi8 * s.pi8, s.pi8);
  EXPECT_EQ(s.pi48 * s.pi48, s.pi48);
  EXPECT_EQ(s.pi8.trace(), Rational(8));
}

TEST(Cayley, ProjectionsResolveIdentity) {
  RationalSampler s(35);
  for (int n = 0; n < 20; ++n) {
    const KForm a = s.form(2), b = s.form(3);
    EXPECT_EQ(project2(a, Lambda2Part::seven) + project2(a, Lambda2Part::twenty_one), a);
    EXPECT_EQ(project3(b, Lambda3Part::eight) + project3(b, Lambda3Part::forty_eight), b);
    EXPECT_EQ(project2(a, Lambda2Part::seven).inner(project2(a, Lambda2Part::twenty_one)), Rational(0));
    EXPECT_EQ(project3(b, Lambda3Part::eight).inner(project3(b, Lambda3Part::forty_eight)), Rational(0));
  }
}

TEST(Cayley, EmbeddedOneFormsHaveNoFortyEightPart) {
  RationalSampler s(36);
  for (int n = 0; n < 10; ++n) {
    const KForm j = lambda3_embedding(s.form(1));
    EXPECT_TRUE(project3(j, Lambda3Part::forty_eight).is_zero());
    EXPECT_EQ(project3(j, Lambda3Part::eight), j);
  }
}
