#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "generators.hpp"
#include "steklov/star_domain.hpp"

namespace {

using namespace steklov;
using steklov::testing::for_all;
using steklov::testing::Gen;
constexpr double kPi = std::numbers::pi;

// Composite Simpson with an even number of panels.
template <class Fn>
double simpson(const Fn& f, double a, double b, int panels) {
  const double h = (b - a) / panels;
  double sum = f(a) + f(b);
  for (int i = 1; i < panels; ++i) sum += (i % 2 ? 4.0 : 2.0) * f(a + i * h);
  return sum * h / 3.0;
}

// Brute-force max of R'^2 / sin^2 R on a dense uniform grid.
double dense_a(const FourierRadius& R, double period, int M) {
  double best = 0.0;
  for (int i = 0; i <= M; ++i) {
    const double t = period * i / M;
    const double s = std::sin(R.value(t));
    best = std::max(best, R.derivative(t) * R.derivative(t) / (s * s));
  }
  return best;
}

TEST(DomainScalars, PlanarCap) {
  const DomainScalars s = domain_scalars(StarDomain(2, kPi / 4));
  EXPECT_DOUBLE_EQ(s.R_m, kPi / 4);
  EXPECT_DOUBLE_EQ(s.R_M, kPi / 4);
  EXPECT_EQ(s.a, 0.0);
  EXPECT_EQ(s.sec_alpha, 1.0);
  EXPECT_NEAR(s.boundary_area, 2 * kPi * std::sin(kPi / 4), 1e-12);
  EXPECT_NEAR(s.boundary_area, 4.4428829, 1e-7);
}

TEST(DomainScalars, ZonalCap) {
  const DomainScalars s = domain_scalars(StarDomain(3, 0.6));
  EXPECT_EQ(s.a, 0.0);
  EXPECT_NEAR(s.boundary_area, 4 * kPi * std::sin(0.6) * std::sin(0.6), 1e-12);
  EXPECT_NEAR(s.boundary_area, 4.006424388, 1e-9);
}

TEST(DomainScalars, PerturbedCapAgainstDenseGrid) {
  const StarDomain d(2, kPi / 4, {{0.05, 2, 0.0}});
  const DomainScalars s = domain_scalars(d);
  EXPECT_NEAR(s.R_m, kPi / 4 - 0.05, 1e-15);
  EXPECT_NEAR(s.R_M, kPi / 4 + 0.05, 1e-15);
  const double oracle = dense_a(d.shape(), 2 * kPi, 100000);
  EXPECT_GE(s.a, oracle - 1e-15);
  EXPECT_NEAR(s.a, oracle, 1e-9);
  EXPECT_NEAR(s.sec_alpha, std::sqrt(1 + s.a), 1e-15);
}

TEST(DomainScalars, PhaseInvariance) {
  for_all(40, 51, [](Gen& g, int) {
    const double R0 = g.uniform(0.4, 1.1);
    const int m = g.integer(1, 6);
    const double eps = g.uniform(0.0, 0.3) * std::min(R0, kPi / 2 - R0);
    const DomainScalars base = domain_scalars(StarDomain(2, R0, {{eps, m, 0.0}}));
    const DomainScalars turned = domain_scalars(StarDomain(2, R0, {{eps, m, g.uniform(0.0, 2 * kPi)}}));
    EXPECT_NEAR(base.a, turned.a, 1e-10);
    EXPECT_NEAR(base.R_m, turned.R_m, 1e-10);
    EXPECT_NEAR(base.R_M, turned.R_M, 1e-10);
    EXPECT_NEAR(base.boundary_area, turned.boundary_area, 1e-10);
  });
}

TEST(DomainScalars, BoundaryAreaAgainstSimpson) {
  for_all(20, 52, [](Gen& g, int) {
    const double R0 = g.uniform(0.4, 1.1);
    const int m = g.integer(1, 5);
    const double eps = g.uniform(0.0, 0.3) * std::min(R0, kPi / 2 - R0);
    for (int n : {2, 3}) {
      const StarDomain d(n, R0, {{eps, m, 0.0}});
      auto density = [&](double t) {
        const double s = std::sin(d.radius(t));
        return std::hypot(s, d.radius_derivative(t));
      };
      const double oracle =
          n == 2 ? simpson(density, 0.0, 2 * kPi, 200000)
                 : 2 * kPi * simpson([&](double t) { return std::sin(d.radius(t)) * density(t) * std::sin(t); }, 0.0,
                                     kPi, 200000);
      EXPECT_NEAR(domain_scalars(d).boundary_area, oracle, 1e-9) << "n=" << n;
    }
  });
}

TEST(DomainScalars, Invariants) {
  for_all(60, 53, [](Gen& g, int) {
    const int n = g.integer(2, 3);
    const double R0 = g.uniform(0.3, 1.2);
    std::vector<ShapeMode> modes;
    double budget = 0.9 * std::min(R0, kPi / 2 - R0);
    for (int j = g.integer(0, 3); j > 0; --j) {
      const double eps = g.uniform(-1.0, 1.0) * budget / 3;
      modes.push_back({eps, g.integer(0, 6), n == 2 ? g.uniform(0.0, 6.0) : 0.0});
    }
    const StarDomain d(n, R0, modes);
    const DomainScalars s = domain_scalars(d);
    EXPECT_LE(s.R_m, s.R_M);
    EXPECT_GE(s.a, 0.0);
    EXPECT_GE(s.sec_alpha, 1.0);
    EXPECT_GT(s.boundary_area, 0.0);
    for (int i = 0; i < 200; ++i) {
      const double t = g.uniform(0.0, d.period());
      EXPECT_GE(d.radius(t), s.R_m - 1e-15);
      EXPECT_LE(d.radius(t), s.R_M + 1e-15);
    }
  });
}

TEST(DomainScalars, GridDoublingAgrees) {
  for_all(20, 54, [](Gen& g, int) {
    const int n = g.integer(2, 3);
    const double R0 = g.uniform(0.4, 1.1);
    const ShapeMode mode{g.uniform(0.0, 0.3) * std::min(R0, kPi / 2 - R0), g.integer(1, 8), 0.0};
    const DomainScalars coarse = domain_scalars(StarDomain(n, R0, {mode}, 10000));
    const DomainScalars fine = domain_scalars(StarDomain(n, R0, {mode}, 20000));
    const auto rel = [](double x, double y) { return std::abs(x - y) / std::max(1e-300, std::abs(y)); };
    EXPECT_LE(rel(coarse.R_m, fine.R_m), 1e-4);
    EXPECT_LE(rel(coarse.R_M, fine.R_M), 1e-4);
    EXPECT_LE(std::abs(coarse.a - fine.a), 1e-4 * std::max(1e-12, fine.a));
    EXPECT_LE(rel(coarse.boundary_area, fine.boundary_area), 1e-4);
  });
}

TEST(StarDomain, Validation) {
  EXPECT_THROW(StarDomain(4, 0.5), ValidationError);
  EXPECT_THROW(StarDomain(2, 0.0), ValidationError);
  EXPECT_THROW(StarDomain(2, 0.5, {}, 9999), ValidationError);
  EXPECT_THROW(StarDomain(3, 0.5, {{0.1, 2, 0.3}}), ValidationError);
  EXPECT_THROW(StarDomain(2, 0.5, {{0.1, -1, 0.0}}), ValidationError);
  EXPECT_THROW(StarDomain(2, 0.5, {{std::nan(""), 2, 0.0}}), ValidationError);
  EXPECT_NO_THROW(StarDomain(2, kPi / 2));
}

TEST(StarDomain, ReportsOffendingAngle) {
  try {
    StarDomain(2, 1.5, {{0.1, 1, 0.0}});
    FAIL() << "expected R > pi/2 to be rejected";
  } catch (const ValidationError& e) {
    EXPECT_EQ(e.field(), "R");
    const double angle = std::remainder(e.where(), 2 * kPi);
    EXPECT_NEAR(angle, 0.0, 1e-6);
  }
  try {
    StarDomain(2, 0.1, {{0.2, 1, 0.0}});
    FAIL() << "expected R <= 0 to be rejected";
  } catch (const ValidationError& e) {
    EXPECT_NEAR(e.where(), kPi, 1e-6);
  }
}

TEST(IsGeodesicBall, Examples) {
  EXPECT_TRUE(is_geodesic_ball(StarDomain(2, kPi / 4), 1e-12));
  EXPECT_FALSE(is_geodesic_ball(StarDomain(2, kPi / 4, {{0.05, 2, 0.0}}), 1e-12));
  EXPECT_TRUE(is_geodesic_ball(StarDomain(2, kPi / 4, {{1e-15, 2, 0.0}}), 1e-12));
  EXPECT_TRUE(is_geodesic_ball(StarDomain(3, 1.0, {{0.3, 0, 0.0}}), 1e-12));
}

}  // namespace
