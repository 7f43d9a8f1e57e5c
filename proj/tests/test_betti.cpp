#include <gtest/gtest.h>

#include "flipchain/betti.hpp"
#include "flipchain/chambers.hpp"
#include "flipchain/errors.hpp"

using namespace flipchain;

namespace {

LaurentPoly one_plus_t_pow(unsigned n) { return pow(LaurentPoly{{0, 1}, {1, 1}}, n); }

// Frozen from an independent sympy expansion of the closed formula.
const std::vector<std::int64_t> kFm2AndFm3_g2_d5 = {1, 4, 8, 16, 32, 48, 55, 56, 55, 48, 32, 16, 8, 4, 1};
const std::vector<std::int64_t> kFm4_g2_d5 = {1, 4, 7, 8, 8, 8, 8, 8, 8, 8, 8, 8, 7, 4, 1};

}  // namespace

TEST(Macdonald, PointCurveAndElliptic) {
  EXPECT_EQ(sym_product_poincare(0, 3), LaurentPoly(1));
  for (int g = 1; g <= 5; ++g) EXPECT_EQ(sym_product_poincare(1, g), (LaurentPoly{{0, 1}, {1, 2 * g}, {2, 1}}));
  EXPECT_EQ(sym_product_poincare(2, 1), LaurentPoly::from_coefficients({1, 2, 2, 2, 1}));
  EXPECT_EQ(sym_product_poincare(2, 1), (one_plus_t_pow(2) * LaurentPoly{{0, 1}, {2, 1}}));
  EXPECT_THROW(sym_product_poincare(-1, 2), InvalidInput);
}

TEST(Macdonald, ProjectiveSpaceForRationalCurve) {
  // S^n P^1 = P^n.
  for (int n = 0; n <= 6; ++n) EXPECT_EQ(sym_product_poincare(n, 0), projective_space_poincare(n));
}

TEST(ProjectiveSpace, Values) {
  EXPECT_EQ(projective_space_poincare(-1), LaurentPoly());
  EXPECT_EQ(projective_space_poincare(0), LaurentPoly(1));
  EXPECT_EQ(projective_space_poincare(2), (LaurentPoly{{0, 1}, {2, 1}, {4, 1}}));
}

TEST(FlipDifference, TerminalAnchor) {
  for (int g = 2; g <= 4; ++g) {
    for (std::int64_t d = -9; d <= -1; ++d) {
      const LaurentPoly expected =
          div_exact((LaurentPoly::t_pow(-2 * d + 2 * g - 2) - LaurentPoly(1)) * one_plus_t_pow(2 * g),
                    LaurentPoly{{0, 1}, {2, -1}});
      EXPECT_EQ(flip_difference(-d - 1, d, g), expected);
    }
  }
}

TEST(FlipDifference, RoutesAgree) {
  EXPECT_EQ(flip_difference_formula(3, -5, 2), flip_difference_bundle(3, -5, 2));
  EXPECT_EQ(flip_difference_formula(2, -5, 2), flip_difference_bundle(2, -5, 2));
  EXPECT_THROW(flip_difference(1, -5, 2), OutOfRange);
  EXPECT_THROW(flip_difference(5, -5, 2), OutOfRange);
}

TEST(FlipDifference, DegreeMatchesFamilyDimension) {
  for (std::int64_t j = 2; j <= 3; ++j) {
    const auto f = flip_locus(j, -5, 2);
    EXPECT_EQ(*flip_locus_poincare(j, -5, 2, FlipSide::Minus).max_exponent(), 2 * f.dim_p_minus);
    EXPECT_EQ(*flip_locus_poincare(j, -5, 2, FlipSide::Plus).max_exponent(), 2 * f.dim_p_plus);
  }
}

TEST(Terminal, Values) {
  EXPECT_EQ(terminal_poincare(-5, 2), one_plus_t_pow(4) * LaurentPoly::from_coefficients({1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1}));
  EXPECT_EQ(*terminal_poincare(-5, 2).max_exponent(), 14);
  EXPECT_EQ(terminal_poincare(-1, 2), (one_plus_t_pow(4) * LaurentPoly{{0, 1}, {2, 1}}));
}

TEST(FmPoincare, FrozenValues) {
  EXPECT_EQ(fm_poincare_recursive(2, -5, 2), LaurentPoly::from_coefficients(kFm2AndFm3_g2_d5));
  EXPECT_EQ(fm_poincare_recursive(3, -5, 2), LaurentPoly::from_coefficients(kFm2AndFm3_g2_d5));
  EXPECT_EQ(fm_poincare_recursive(4, -5, 2), LaurentPoly::from_coefficients(kFm4_g2_d5));
  EXPECT_EQ(fm_poincare_closed(2, -5, 2), LaurentPoly::from_coefficients(kFm2AndFm3_g2_d5));
}

TEST(FmPoincare, TerminalChamber) {
  for (std::int64_t d = -9; d <= -1; ++d) {
    EXPECT_EQ(fm_poincare_recursive(-d - 1, d, 3), terminal_poincare(d, 3));
    EXPECT_EQ(fm_poincare_closed(-d - 1, d, 3), terminal_poincare(d, 3));
  }
}

TEST(FmPoincare, ShapeAtFirstChamber) {
  const auto p = fm_poincare_recursive(2, -5, 2);
  EXPECT_EQ(*p.max_exponent(), 14);
  EXPECT_TRUE(p.is_palindromic());
  EXPECT_EQ(p.coeff(0), 1);
}

TEST(FmPoincare, RoutesAgreeOnGrid) {
  for (int g = 2; g <= 3; ++g) {
    for (std::int64_t d = -9; d <= -1; ++d) {
      for (std::int64_t i = chamber_index_min(d); i <= -d - 1; ++i) {
        EXPECT_EQ(fm_poincare_recursive(i, d, g), fm_poincare_closed(i, d, g)) << i << " " << d << " " << g;
      }
    }
  }
}

TEST(FmPoincare, Errors) {
  EXPECT_THROW(fm_poincare_recursive(1, -5, 2), OutOfRange);
  EXPECT_THROW(fm_poincare_closed(5, -5, 2), OutOfRange);
  EXPECT_THROW(fm_poincare_closed(2, 5, 2), InvalidInput);
}

TEST(U2d, GenusTwo) {
  const LaurentPoly factor = LaurentPoly::from_coefficients({1, 0, 1, 4, 1, 0, 1});
  EXPECT_EQ(u2d_poincare(2), one_plus_t_pow(4) * factor);
  EXPECT_EQ(*u2d_poincare(2).max_exponent(), 10);
  const LaurentPoly numerator = pow(LaurentPoly{{0, 1}, {3, 1}}, 4) - one_plus_t_pow(4).shifted(4);
  EXPECT_EQ(div_exact(numerator, LaurentPoly{{0, 1}, {2, -1}} * LaurentPoly{{0, 1}, {4, -1}}), factor);
}

TEST(U2d, ShapeForHigherGenus) {
  for (int g = 2; g <= 5; ++g) {
    const auto p = u2d_poincare(g);
    EXPECT_EQ(*p.max_exponent(), 2 * (4 * g - 3));
    EXPECT_TRUE(p.is_palindromic());
    EXPECT_TRUE(p.has_nonnegative_coefficients());
  }
}

TEST(U2d, ViaBundle) {
  EXPECT_EQ(u2d_from_bundle(2, -5), u2d_poincare(2));
  EXPECT_EQ(u2d_from_bundle(3, -9), u2d_poincare(3));
  EXPECT_EQ(u2d_from_bundle(2, -9), u2d_poincare(2));
  EXPECT_EQ(div_exact(LaurentPoly{{0, 1}, {6, -1}}, LaurentPoly{{0, 1}, {2, -1}}), projective_space_poincare(2));
  EXPECT_THROW(u2d_from_bundle(2, -3), PreconditionFailed);
  EXPECT_THROW(u2d_from_bundle(2, -6), PreconditionFailed);
  EXPECT_THROW(u2d_from_bundle(3, -7), PreconditionFailed);
}

TEST(Mcon, ProductWithP1) {
  EXPECT_EQ(mcon_poincare(2), (one_plus_t_pow(4) * LaurentPoly::from_coefficients({1, 0, 1, 4, 1, 0, 1}) *
                                LaurentPoly{{0, 1}, {2, 1}}));
  for (int g = 2; g <= 4; ++g) {
    EXPECT_EQ(mcon_poincare(g), (u2d_poincare(g) * LaurentPoly{{0, 1}, {2, 1}}));
    EXPECT_EQ(*mcon_poincare(g).max_exponent(), 2 * (4 * g - 3) + 2);
  }
}

TEST(Blowup, Consistency) {
  const auto check = blowup_consistency(-5, 2);
  EXPECT_EQ(check.codim, 4);
  EXPECT_TRUE(check.holds()) << check.diff.to_string();
  const auto edge = blowup_consistency(-3, 2);
  EXPECT_EQ(edge.codim, 2);
  EXPECT_TRUE(edge.holds()) << edge.diff.to_string();
  EXPECT_THROW(blowup_consistency(-2, 2), PreconditionFailed);
}

TEST(Blowup, DivisorCenterAddsNothing) {
  for (int g = 2; g <= 5; ++g) EXPECT_EQ(blowup_correction(g, 1), LaurentPoly());
}

TEST(BettiReport, FullAndSingleChamber) {
  const auto r = build_betti_report(-5, 2);
  EXPECT_TRUE(r.consistent());
  ASSERT_EQ(r.chambers.size(), 3u);
  EXPECT_EQ(r.chambers.front().i, 2);
  EXPECT_EQ(r.chambers.back().i, 4);
  EXPECT_TRUE(r.u2d && r.u2d->agree && *r.u2d->agree);
  EXPECT_TRUE(r.blowup_check && *r.blowup_check);

  const auto single = build_betti_report(-5, 2, 3);
  ASSERT_EQ(single.chambers.size(), 1u);
  EXPECT_EQ(single.chambers[0], r.chambers[1]);
  EXPECT_THROW(build_betti_report(-5, 2, 7), OutOfRange);
}

TEST(BettiReport, EvenDegreeHasNoFixedDeterminantEntry) {
  const auto r = build_betti_report(-6, 2);
  EXPECT_FALSE(r.u2d);
  EXPECT_FALSE(r.mcon);
  EXPECT_TRUE(r.consistent());
}

TEST(BettiReport, FailuresAreNamed) {
  auto r = build_betti_report(-5, 2);
  r.chambers[1].agree = false;
  r.blowup_check = false;
  const auto failures = r.failures();
  ASSERT_EQ(failures.size(), 2u);
  EXPECT_NE(failures[0].find("i=3, d=-5, g=2"), std::string::npos);
  EXPECT_FALSE(r.consistent());
}
