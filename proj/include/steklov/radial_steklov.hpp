#pragma once

// First Steklov eigenvalue of a rotationally invariant ball.
//
// The first eigenfunction separates as psi(r) e(u) with e a first spherical
// harmonic, and psi solves the eigenvalue-free radial equation
//
//   psi'' + (n-1) (sigma'/sigma) psi' - (n-1) psi / sigma^2 = 0,  psi(0) = 0.
//
// The eigenvalue enters only through psi'(R) = mu1 psi(R), so one initial
// value solve gives mu1 = psi'(R)/psi(R).

#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "steklov/error.hpp"
#include "steklov/steklov_result.hpp"
#include "steklov/warped_profile.hpp"

namespace steklov {

inline constexpr int kDefaultRadialSteps = 2000;

/// psi'(R)/psi(R) from one classical RK4 sweep with `steps` uniform steps.
///
/// The indicial roots at r = 0 are 1 and -(n-1). The regular branch psi ~ r
/// is selected by starting at r0 = 1e-2 R / steps with psi = r0, psi' = 1;
/// the O(r0^2) start error feeds the singular branch, which decays.
template <WarpingFamily F>
double shoot_boundary_ratio(const WarpedProfile<F>& p, int steps) {
  if (steps < 100) throw DomainError("radial solve needs at least 100 steps, got " + std::to_string(steps));
  const double R = p.radius();
  const double nm1 = p.dimension() - 1.0;
  const double r0 = R * 1e-2 / steps;
  const double h = (R - r0) / steps;

  // y = (psi, psi')
  auto rhs = [&](double r, const std::array<double, 2>& y) -> std::array<double, 2> {
    const double s = p.sigma(r);
    return {y[1], nm1 * (y[0] / (s * s) - p.dsigma(r) / s * y[1])};
  };

  std::array<double, 2> y{r0, 1.0};
  for (int i = 0; i < steps; ++i) {
    const double r = r0 + i * h;
    const auto k1 = rhs(r, y);
    const auto k2 = rhs(r + 0.5 * h, {y[0] + 0.5 * h * k1[0], y[1] + 0.5 * h * k1[1]});
    const auto k3 = rhs(r + 0.5 * h, {y[0] + 0.5 * h * k2[0], y[1] + 0.5 * h * k2[1]});
    const auto k4 = rhs(i + 1 == steps ? R : r + h, {y[0] + h * k3[0], y[1] + h * k3[1]});
    y[0] += h / 6.0 * (k1[0] + 2.0 * k2[0] + 2.0 * k3[0] + k4[0]);
    y[1] += h / 6.0 * (k1[1] + 2.0 * k2[1] + 2.0 * k3[1] + k4[1]);
  }
  if (!(y[0] > 0.0) || !std::isfinite(y[1]))
    throw SolverError("radial solution not admissible at r = R (psi(R) = " + std::to_string(y[0]) + ")");
  return y[1] / y[0];
}

/// mu1 of (B_R, g); solves at `steps` and 2*steps and reports the finer value.
template <WarpingFamily F>
SteklovResult radial_mu1(const WarpedProfile<F>& p, int steps = kDefaultRadialSteps) {
  const double coarse = shoot_boundary_ratio(p, steps);
  const double fine = shoot_boundary_ratio(p, 2 * steps);
  SteklovResult out;
  out.mu1 = fine;
  out.method = SteklovMethod::RadialShooting;
  out.step_or_degree = 2 * steps;
  out.err_estimate = std::abs(fine - coarse);
  out.under_resolved = out.err_estimate > 1e-4 * std::abs(fine);
  return out;
}

/// mu1 of the geodesic ball of radius R in the round sphere S^n.
inline SteklovResult ball_mu1_sphere(int n, double R, int steps = kDefaultRadialSteps) {
  if (n < 2) throw DomainError("dimension must be >= 2");
  if (!(R > 0.0) || R > std::numbers::pi / 2.0 * (1.0 + 1e-15))
    throw DomainError("geodesic ball radius must lie in (0, pi/2], got " + std::to_string(R));
  return radial_mu1(RadialProfile(n, R, ConstantCurvature{1.0}), steps);
}

}  // namespace steklov
