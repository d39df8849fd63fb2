#pragma once

// Comparison functions of the constant-curvature space forms.
//
// sin_k is the solution of y'' + k y = 0, y(0) = 0, y'(0) = 1:
//
//   sin_k(r) = r                        k = 0
//            = sin(sqrt(k) r) / sqrt(k)   k > 0
//            = sinh(sqrt(-k) r) / sqrt(-k) k < 0
//
// and cos_k = sin_k'. Near k r^2 = 0 both are evaluated from their Taylor
// series in k r^2 so the three branches join continuously.

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "steklov/error.hpp"

namespace steklov {

/// Sectional curvature k of a comparison space form.
struct SpaceFormParam {
  double k = 0.0;

  SpaceFormParam() = default;
  explicit SpaceFormParam(double curvature) : k(curvature) {
    if (!std::isfinite(curvature)) throw DomainError("space form curvature must be finite");
  }

  /// Largest admissible radius: pi/sqrt(k) for k > 0, +inf otherwise.
  double max_radius() const noexcept {
    return k > 0.0 ? std::numbers::pi / std::sqrt(k) : std::numeric_limits<double>::infinity();
  }
};

namespace detail {

// |k| r^2 below this uses the series.
inline constexpr double kSeriesThreshold = 1e-8;

inline void check_radius(const SpaceFormParam& sf, double r) {
  if (!(r >= 0.0) || !std::isfinite(r))
    throw DomainError("space form radius must be finite and non-negative, got " + std::to_string(r));
  // Allow a few ulps past pi/sqrt(k) so that R = pi/sqrt(k) computed in
  // floating point is still accepted.
  if (sf.k > 0.0 && r > sf.max_radius() * (1.0 + 8 * std::numeric_limits<double>::epsilon()))
    throw DomainError("radius " + std::to_string(r) + " exceeds pi/sqrt(k) for k = " + std::to_string(sf.k));
}

}  // namespace detail

/// sin_k(r) / r, well defined (= 1) at r = 0.
inline double sin_k_over_r(const SpaceFormParam& sf, double r) {
  detail::check_radius(sf, r);
  const double x = sf.k * r * r;
  if (std::abs(x) < detail::kSeriesThreshold) return 1.0 - x / 6.0 + x * x / 120.0 - x * x * x / 5040.0;
  if (sf.k > 0.0) {
    const double s = std::sqrt(sf.k);
    return std::sin(s * r) / (s * r);
  }
  const double s = std::sqrt(-sf.k);
  return std::sinh(s * r) / (s * r);
}

inline double sin_k(const SpaceFormParam& sf, double r) {
  detail::check_radius(sf, r);
  const double x = sf.k * r * r;
  if (std::abs(x) < detail::kSeriesThreshold) return r * (1.0 - x / 6.0 + x * x / 120.0 - x * x * x / 5040.0);
  if (sf.k > 0.0) {
    const double s = std::sqrt(sf.k);
    return std::sin(s * r) / s;
  }
  const double s = std::sqrt(-sf.k);
  return std::sinh(s * r) / s;
}

/// d/dr sin_k(r).
inline double cos_k(const SpaceFormParam& sf, double r) {
  detail::check_radius(sf, r);
  const double x = sf.k * r * r;
  if (std::abs(x) < detail::kSeriesThreshold) return 1.0 - x / 2.0 + x * x / 24.0 - x * x * x / 720.0;
  if (sf.k > 0.0) return std::cos(std::sqrt(sf.k) * r);
  return std::cosh(std::sqrt(-sf.k) * r);
}

/// Signed gap sin(a x) - a sin(x) of the sine scaling inequality.
///
/// On 0 <= x <= pi/2 the gap is non-negative for 0 <= a <= 1 and
/// non-positive for a >= 1; it vanishes identically in x only for a = 0 and
/// a = 1. Returned signed so callers can report margins.
inline double sine_scaling_gap(double a, double x) {
  constexpr double kHalfPi = std::numbers::pi / 2.0;
  if (!(a >= 0.0) || !std::isfinite(a)) throw DomainError("scaling factor a must be finite and >= 0");
  if (!(x >= 0.0) || x > kHalfPi * (1.0 + 4 * std::numeric_limits<double>::epsilon()))
    throw DomainError("x must lie in [0, pi/2], got " + std::to_string(x));
  return std::sin(a * x) - a * std::sin(x);
}

}  // namespace steklov
