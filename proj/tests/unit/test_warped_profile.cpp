#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "generators.hpp"
#include "steklov/warped_profile.hpp"

namespace {

using namespace steklov;
using steklov::testing::for_all;
using steklov::testing::Gen;
constexpr double kPi = std::numbers::pi;

// sigma(r) = c0 + c1 r - c2 r^2, for exercising construction checks
struct Quadratic {
  double c0 = 0.0, c1 = 1.0, c2 = 0.0;
  double sigma(double r) const { return c0 + c1 * r - c2 * r * r; }
  double dsigma(double r) const { return c1 - 2 * c2 * r; }
  double d2sigma(double) const { return -2 * c2; }
  double sigma_over_r(double r) const { return c0 / r + c1 - c2 * r; }
  double d2sigma_over_r(double r) const { return -2 * c2 / r; }
  double max_radius() const { return 100.0; }
};
static_assert(WarpingFamily<Quadratic>);
static_assert(WarpingFamily<ProfileFamily>);

// K for sigma = sin_k + eps r^3, substituted by hand
double cubic_curvature(double k, double eps, double r) {
  const double s = sin_k(SpaceFormParam{k}, r);
  return -(-k * s + 6 * eps * r) / (s + eps * r * r * r);
}

TEST(WarpedProfile, ConstructionChecks) {
  EXPECT_THROW(WarpedProfile(1, 1.0, ConstantCurvature{0.0}), ValidationError);
  EXPECT_THROW(WarpedProfile(2, 0.0, ConstantCurvature{0.0}), ValidationError);
  EXPECT_THROW(WarpedProfile(2, 3.5, ConstantCurvature{1.0}), ValidationError);
  EXPECT_THROW(WarpedProfile(2, 1.0, Quadratic{0.1, 1.0, 0.0}), ValidationError);
  EXPECT_THROW(WarpedProfile(2, 1.0, Quadratic{0.0, 0.9, 0.0}), ValidationError);
  EXPECT_NO_THROW(WarpedProfile(2, 1.0, Quadratic{0.0, 1.0, 0.5}));
  try {
    WarpedProfile(2, 3.0, Quadratic{0.0, 1.0, 0.5});  // sigma(2) = 0
    FAIL() << "expected a positivity failure";
  } catch (const ValidationError& e) {
    EXPECT_EQ(e.field(), "sigma");
    EXPECT_NEAR(e.where(), 2.0, 3.0 / 1000);
  }
  EXPECT_THROW(RadialProfile(2, 1.0, CubicPerturbed{0.0, -1.0}), ValidationError);  // r - r^3 vanishes at 1
}

TEST(WarpedProfile, ProfileFamilyDispatch) {
  const RadialProfile p(3, 1.0, CubicPerturbed{-1.0, -0.05});
  EXPECT_EQ(p.family().base_curvature(), -1.0);
  EXPECT_NEAR(p.sigma(1.0), std::sinh(1.0) - 0.05, 1e-15);
  EXPECT_NEAR(p.dsigma(1.0), std::cosh(1.0) - 0.15, 1e-15);
  EXPECT_NEAR(p.d2sigma(1.0), std::sinh(1.0) - 0.3, 1e-15);
}

TEST(RadialCurvature, TabulatedValues) {
  EXPECT_NEAR(radial_curvature(RadialProfile(2, 1.0, ConstantCurvature{1.0}), 0.8), 1.0, 1e-15);
  EXPECT_NEAR(radial_curvature(RadialProfile(2, 1.0, ConstantCurvature{-1.0}), 0.5), -1.0, 1e-15);
  EXPECT_NEAR(radial_curvature(RadialProfile(2, 1.0, CubicPerturbed{0.0, -0.1}), 0.5), 0.6153846153846154, 1e-14);
}

TEST(RadialCurvature, MatchesHandSubstitution) {
  for_all(400, 21, [](Gen& g, int) {
    const double k = g.pick({-1.0, 0.0, 1.0});
    const double eps = g.uniform(-0.1, 0.1);
    const RadialProfile p(2, 1.0, CubicPerturbed{k, eps});
    const double r = g.uniform(0.05, 1.0);
    EXPECT_NEAR(radial_curvature(p, r), cubic_curvature(k, eps, r), 1e-11);
  });
}

TEST(RadialCurvature, RegularAtOrigin) {
  // K(r) -> k - 6 eps as r -> 0
  const RadialProfile p(2, 1.0, CubicPerturbed{1.0, -0.1});
  EXPECT_NEAR(radial_curvature(p, 1e-9), 1.6, 1e-8);
}

TEST(RadialCurvature, RejectsOutsideBall) {
  const RadialProfile p(2, 1.0, ConstantCurvature{0.0});
  EXPECT_THROW(radial_curvature(p, 0.0), DomainError);
  EXPECT_THROW(radial_curvature(p, 1.01), DomainError);
}

TEST(CurvatureBound, SpaceFormIsTight) {
  const auto c = check_curvature_bound(RadialProfile(2, 1.0, ConstantCurvature{1.0}), 1.0, CurvatureSide::AtLeast, 1000);
  EXPECT_TRUE(c.holds);
  EXPECT_NEAR(c.worst_margin, 0.0, 1e-14);
}

TEST(CurvatureBound, CubicSides) {
  EXPECT_TRUE(check_curvature_bound(RadialProfile(2, 1.0, CubicPerturbed{0.0, -0.1}), 0.0, CurvatureSide::AtLeast, 1000).holds);
  EXPECT_TRUE(check_curvature_bound(RadialProfile(2, 1.0, CubicPerturbed{0.0, 0.1}), 0.0, CurvatureSide::AtMost, 1000).holds);
  const auto wrong = check_curvature_bound(RadialProfile(2, 1.0, CubicPerturbed{0.0, 0.1}), 0.0, CurvatureSide::AtLeast, 1000);
  EXPECT_FALSE(wrong.holds);
  EXPECT_LT(wrong.worst_margin, 0.0);
  EXPECT_GT(wrong.worst_r, 0.0);
  EXPECT_THROW(check_curvature_bound(RadialProfile(2, 1.0, ConstantCurvature{0.0}), 0.0, CurvatureSide::AtLeast, 99),
               DomainError);
}

TEST(CurvatureBound, LastSampleStaysInsideBall) {
  // R * samples / samples rounds above R for some R
  for_all(2000, 24, [](Gen& g, int) {
    const double R = g.uniform(0.1, 1.0);
    EXPECT_NO_THROW(check_curvature_bound(RadialProfile(2, R, ConstantCurvature{0.0}), 0.0, CurvatureSide::AtLeast,
                                          g.integer(100, 2000)));
  });
}

TEST(CurvatureBound, SignOppositeToPerturbation) {
  for_all(200, 22, [](Gen& g, int) {
    const double k = g.pick({-1.0, 0.0, 1.0});
    const double eps = g.uniform(0.005, 0.1);
    const int n = g.integer(2, 5);
    EXPECT_TRUE(check_curvature_bound(RadialProfile(n, 1.0, CubicPerturbed{k, -eps}), k, CurvatureSide::AtLeast, 500).holds);
    EXPECT_TRUE(check_curvature_bound(RadialProfile(n, 1.0, CubicPerturbed{k, eps}), k, CurvatureSide::AtMost, 500).holds);
  });
}

TEST(ComparisonReport, SpaceFormIsExact) {
  const auto c = comparison_report(RadialProfile(2, 1.0, ConstantCurvature{1.0}), 1.0, 1000);
  EXPECT_LE(c.max_ratio_violation, 0.0);
  EXPECT_NEAR(c.ratio_monotone_violation, 0.0, 1e-15);
  EXPECT_NEAR(c.limit_at_zero, 1.0, 1e-15);
  EXPECT_TRUE(c.holds());
}

TEST(ComparisonReport, CubicClosedFormRatio) {
  // ratio = 1 - 0.1 r^2, strictly decreasing
  const RadialProfile p(2, 1.0, CubicPerturbed{0.0, -0.1});
  const auto c = comparison_report(p, 0.0, 1000);
  EXPECT_LE(c.max_ratio_violation, 0.0);
  EXPECT_LT(c.ratio_monotone_violation, 0.0);
  EXPECT_NEAR(c.ratio_monotone_violation, -0.1 * (1e-6 * 3), 1e-12);  // first difference, r = 1e-3 to 2e-3
  EXPECT_NEAR(c.limit_at_zero, 1.0 - 0.1 * 1e-8, 1e-15);
  for (double r : {0.1, 0.5, 1.0}) EXPECT_NEAR(p.ratio_to_space_form(0.0, r), 1.0 - 0.1 * r * r, 1e-15);
  EXPECT_TRUE(c.holds());
}

TEST(ComparisonReport, PropertySweep) {
  for_all(100, 23, [](Gen& g, int) {
    const double k = g.uniform(-1.5, 1.5);
    const double eps = g.uniform(0.0, 0.1);
    const double R = g.uniform(0.2, 1.0);
    const auto below = comparison_report(RadialProfile(2, R, CubicPerturbed{k, -eps}), k, 500);
    EXPECT_TRUE(below.holds()) << below.max_ratio_violation << " " << below.ratio_monotone_violation;
    const auto above = comparison_report(RadialProfile(2, R, CubicPerturbed{k, eps}), k, 500, CurvatureSide::AtMost);
    EXPECT_TRUE(above.holds()) << above.max_ratio_violation << " " << above.ratio_monotone_violation;
  });
}

TEST(ComparisonReport, PreconditionFailure) {
  EXPECT_THROW(comparison_report(RadialProfile(2, 1.0, CubicPerturbed{0.0, 0.1}), 0.0, 1000), PreconditionError);
  EXPECT_THROW(comparison_report(RadialProfile(2, 2.0, ConstantCurvature{0.0}), 1.0, 1000), PreconditionError);
  EXPECT_THROW(comparison_report(RadialProfile(2, 1.0, CubicPerturbed{-1.0, -0.05}), -1.0, 1000, CurvatureSide::AtMost),
               PreconditionError);
}

}  // namespace
