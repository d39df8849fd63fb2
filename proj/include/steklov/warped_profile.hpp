#pragma once

// Rotationally invariant metrics g = dr^2 + sigma(r)^2 du^2 on a ball B_R.
//
// A warping family supplies sigma, sigma', sigma'' in closed form together
// with the smooth quotients sigma(r)/r and sigma''(r)/r, which stay finite at
// r = 0 and are used wherever sigma itself would produce 0/0.

#include <algorithm>
#include <cmath>
#include <concepts>
#include <limits>
#include <string>
#include <variant>

#include "steklov/error.hpp"
#include "steklov/spaceform.hpp"

namespace steklov {

template <class F>
concept WarpingFamily = requires(const F& f, double r) {
  { f.sigma(r) } -> std::convertible_to<double>;
  { f.dsigma(r) } -> std::convertible_to<double>;
  { f.d2sigma(r) } -> std::convertible_to<double>;
  { f.sigma_over_r(r) } -> std::convertible_to<double>;
  { f.d2sigma_over_r(r) } -> std::convertible_to<double>;
  { f.max_radius() } -> std::convertible_to<double>;
};

/// sigma = sin_k: the constant curvature k metric.
struct ConstantCurvature {
  double k = 0.0;

  double sigma(double r) const { return sin_k(SpaceFormParam{k}, r); }
  double dsigma(double r) const { return cos_k(SpaceFormParam{k}, r); }
  double d2sigma(double r) const { return -k * sin_k(SpaceFormParam{k}, r); }
  double sigma_over_r(double r) const { return sin_k_over_r(SpaceFormParam{k}, r); }
  double d2sigma_over_r(double r) const { return -k * sin_k_over_r(SpaceFormParam{k}, r); }
  double max_radius() const { return SpaceFormParam{k}.max_radius(); }
};

/// sigma = sin_k + eps r^3. The cubic term leaves sigma(0) and sigma'(0)
/// untouched and shifts the radial curvature by -eps r (6 + k r^2) / sigma.
struct CubicPerturbed {
  double k = 0.0;
  double eps = 0.0;

  double sigma(double r) const { return sin_k(SpaceFormParam{k}, r) + eps * r * r * r; }
  double dsigma(double r) const { return cos_k(SpaceFormParam{k}, r) + 3.0 * eps * r * r; }
  double d2sigma(double r) const { return -k * sin_k(SpaceFormParam{k}, r) + 6.0 * eps * r; }
  double sigma_over_r(double r) const { return sin_k_over_r(SpaceFormParam{k}, r) + eps * r * r; }
  double d2sigma_over_r(double r) const { return -k * sin_k_over_r(SpaceFormParam{k}, r) + 6.0 * eps; }
  double max_radius() const { return SpaceFormParam{k}.max_radius(); }
};

/// Runtime choice between the closed-form families.
class ProfileFamily {
 public:
  ProfileFamily(ConstantCurvature f) : v_(f) {}  // NOLINT(google-explicit-constructor)
  ProfileFamily(CubicPerturbed f) : v_(f) {}     // NOLINT(google-explicit-constructor)

  double sigma(double r) const { return visit([r](const auto& f) { return f.sigma(r); }); }
  double dsigma(double r) const { return visit([r](const auto& f) { return f.dsigma(r); }); }
  double d2sigma(double r) const { return visit([r](const auto& f) { return f.d2sigma(r); }); }
  double sigma_over_r(double r) const { return visit([r](const auto& f) { return f.sigma_over_r(r); }); }
  double d2sigma_over_r(double r) const { return visit([r](const auto& f) { return f.d2sigma_over_r(r); }); }
  double max_radius() const { return visit([](const auto& f) { return f.max_radius(); }); }

  /// Curvature of the underlying space form (k of either family).
  double base_curvature() const { return visit([](const auto& f) { return f.k; }); }
  const std::variant<ConstantCurvature, CubicPerturbed>& variant() const noexcept { return v_; }

 private:
  template <class Fn>
  double visit(Fn&& fn) const {
    return std::visit(std::forward<Fn>(fn), v_);
  }

  std::variant<ConstantCurvature, CubicPerturbed> v_;
};

static_assert(WarpingFamily<ConstantCurvature>);
static_assert(WarpingFamily<CubicPerturbed>);
static_assert(WarpingFamily<ProfileFamily>);

/// Warping function sigma of dimension n on [0, R]. Immutable once built;
/// construction enforces sigma(0) = 0, sigma'(0) = 1, sigma > 0 on (0, R] and
/// R within the family's range.
template <WarpingFamily F>
class WarpedProfile {
 public:
  static constexpr int kPositivitySamples = 1000;

  WarpedProfile(int n, double R, F family) : n_(n), R_(R), family_(std::move(family)) {
    if (n_ < 2) throw ValidationError("n", "dimension must be >= 2, got " + std::to_string(n_));
    if (!(R_ > 0.0) || !std::isfinite(R_)) throw ValidationError("R", "radius must be positive and finite");
    const double r_max = family_.max_radius();
    if (R_ > r_max * (1.0 + 8 * std::numeric_limits<double>::epsilon()))
      throw ValidationError("R", "radius exceeds pi/sqrt(k) = " + std::to_string(r_max), R_);
    if (std::abs(family_.sigma(0.0)) > 1e-14) throw ValidationError("sigma(0)", "must vanish", 0.0);
    if (std::abs(family_.dsigma(0.0) - 1.0) > 1e-12)
      throw ValidationError("sigma'(0)", "must equal 1, got " + std::to_string(family_.dsigma(0.0)), 0.0);
    for (int i = 1; i <= kPositivitySamples; ++i) {
      const double r = R_ * i / kPositivitySamples;
      if (!(family_.sigma(r) > 0.0)) throw ValidationError("sigma", "must be positive on (0, R]", r);
    }
  }

  int dimension() const noexcept { return n_; }
  double radius() const noexcept { return R_; }
  const F& family() const noexcept { return family_; }

  double sigma(double r) const { return family_.sigma(r); }
  double dsigma(double r) const { return family_.dsigma(r); }
  double d2sigma(double r) const { return family_.d2sigma(r); }

  /// sigma(r) / sin_k(r), finite down to r = 0 where it equals 1.
  double ratio_to_space_form(double k, double r) const {
    return family_.sigma_over_r(r) / sin_k_over_r(SpaceFormParam{k}, r);
  }

 private:
  int n_;
  double R_;
  F family_;
};

using RadialProfile = WarpedProfile<ProfileFamily>;

enum class CurvatureSide { AtLeast, AtMost };

constexpr std::string_view to_string(CurvatureSide s) noexcept {
  return s == CurvatureSide::AtLeast ? "AtLeast" : "AtMost";
}

/// Radial curvature K(r) = -sigma''(r)/sigma(r), from the r-regular quotients.
template <WarpingFamily F>
double radial_curvature(const WarpedProfile<F>& p, double r) {
  if (!(r > 0.0) || r > p.radius()) throw DomainError("radial curvature needs 0 < r <= R, got " + std::to_string(r));
  return -p.family().d2sigma_over_r(r) / p.family().sigma_over_r(r);
}

struct CurvatureBoundCheck {
  double bound_k = 0.0;
  CurvatureSide side = CurvatureSide::AtLeast;
  bool holds = false;
  // min over the grid of (K - k) for AtLeast, (k - K) for AtMost.
  double worst_margin = 0.0;
  double worst_r = 0.0;
};

inline constexpr double kCurvatureTolerance = 1e-10;

/// Samples K on r_i = R i / samples, i = 1..samples.
template <WarpingFamily F>
CurvatureBoundCheck check_curvature_bound(const WarpedProfile<F>& p, double k, CurvatureSide side, int samples) {
  if (samples < 100) throw DomainError("curvature check needs at least 100 samples");
  CurvatureBoundCheck out{k, side, false, std::numeric_limits<double>::infinity(), 0.0};
  for (int i = 1; i <= samples; ++i) {
    const double r = std::min(p.radius(), p.radius() * i / samples);
    const double K = radial_curvature(p, r);
    const double margin = side == CurvatureSide::AtLeast ? K - k : k - K;
    if (margin < out.worst_margin) {
      out.worst_margin = margin;
      out.worst_r = r;
    }
  }
  out.holds = out.worst_margin >= -kCurvatureTolerance;
  return out;
}

/// Grid evaluation of the Sturm comparison between sigma and sin_k.
///
/// For K >= k (AtLeast): sigma <= sin_k, sigma/sin_k non-increasing, and the
/// ratio tends to 1 at the origin. For K <= k (AtMost) the first two are
/// reversed. Violations are oriented so that <= 0 means the property holds.
struct ComparisonReport {
  double max_ratio_violation = 0.0;       // max of sigma - sin_k (reversed for AtMost)
  double ratio_monotone_violation = 0.0;  // max forward difference of sigma/sin_k (reversed for AtMost)
  double limit_at_zero = 0.0;             // sigma/sin_k at r = 1e-4

  static constexpr double kTolerance = 1e-10;
  static constexpr double kLimitTolerance = 1e-6;
  static constexpr double kLimitRadius = 1e-4;

  bool holds() const noexcept {
    return max_ratio_violation <= kTolerance && ratio_monotone_violation <= kTolerance &&
           std::abs(limit_at_zero - 1.0) <= kLimitTolerance;
  }
};

template <WarpingFamily F>
ComparisonReport comparison_report(const WarpedProfile<F>& p, double k, int samples,
                                   CurvatureSide side = CurvatureSide::AtLeast) {
  const SpaceFormParam sf{k};
  if (k > 0.0 && p.radius() > sf.max_radius() * (1.0 + 8 * std::numeric_limits<double>::epsilon()))
    throw PreconditionError("comparison needs R <= pi/sqrt(k)");
  const auto curv = check_curvature_bound(p, k, side, std::max(samples, 100));
  if (!curv.holds)
    throw PreconditionError("radial curvature bound " + std::string(to_string(side)) + " " + std::to_string(k) +
                            " fails at r = " + std::to_string(curv.worst_r) +
                            " (margin " + std::to_string(curv.worst_margin) + ")");

  const double sign = side == CurvatureSide::AtLeast ? 1.0 : -1.0;
  ComparisonReport out;
  out.max_ratio_violation = -std::numeric_limits<double>::infinity();
  out.ratio_monotone_violation = -std::numeric_limits<double>::infinity();
  double prev_ratio = 0.0;
  for (int i = 1; i <= samples; ++i) {
    const double r = std::min(p.radius(), p.radius() * i / samples);
    out.max_ratio_violation = std::max(out.max_ratio_violation, sign * (p.sigma(r) - sin_k(sf, r)));
    const double ratio = p.ratio_to_space_form(k, r);
    if (i > 1) out.ratio_monotone_violation = std::max(out.ratio_monotone_violation, sign * (ratio - prev_ratio));
    prev_ratio = ratio;
  }
  out.limit_at_zero = p.ratio_to_space_form(k, std::min(ComparisonReport::kLimitRadius, p.radius()));
  return out;
}

}  // namespace steklov
