#pragma once

// Closed-form lower/upper bounds on mu1 and the verdicts comparing them with
// computed eigenvalues. All eigenvalue inputs are passed in explicitly.

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <optional>
#include <string>

#include "json.hpp"
#include "steklov/error.hpp"
#include "steklov/spaceform.hpp"
#include "steklov/star_domain.hpp"
#include "steklov/steklov_result.hpp"
#include "steklov/warped_profile.hpp"

namespace steklov {

enum class Verdict { Holds, Violated, NotComparable };

constexpr std::string_view to_string(Verdict v) noexcept {
  switch (v) {
    case Verdict::Holds: return "Holds";
    case Verdict::Violated: return "Violated";
    case Verdict::NotComparable: return "NotComparable";
  }
  return "Unknown";
}

inline constexpr double kVerdictRelTol = 1e-8;

struct BoundReport {
  std::string bound_name;
  std::optional<double> lower;
  std::optional<double> upper;
  std::optional<SteklovResult> mu1_reference;
  Verdict verdict = Verdict::NotComparable;
  // min signed slack over the sides checked
  double margin = 0.0;
  nlohmann::json inputs_echo = nlohmann::json::object();
};

/// Holds iff margin >= -rel_tol * max(1, |mu1|).
inline Verdict judge(double margin, double mu1, double rel_tol = kVerdictRelTol) {
  return margin >= -rel_tol * std::max(1.0, std::abs(mu1)) ? Verdict::Holds : Verdict::Violated;
}

/// (2 + a - sqrt(a^2 + 4a)) / 2, written as 2 / (2 + a + sqrt(a^2 + 4a)) to
/// avoid cancellation at large a. Lies in (0, 1], equal to 1 only at a = 0.
inline double gradient_balance_factor(double a) {
  if (!(a >= 0.0) || !std::isfinite(a)) throw DomainError("a must be finite and >= 0");
  return 2.0 / (2.0 + a + std::sqrt(a * a + 4.0 * a));
}

/// Lower bound for mu1 of a star-shaped domain in S^n in terms of its
/// radial extent, its gradient parameter a, and mu1 of the inscribed
/// geodesic ball B(R_m):
///
///   (R_m/R_M) * f(a) * sin^{n-1}(R_m) / (sec(alpha) sin^{n-1}(R_M)) * mu1(B(R_m)).
///
/// Equality holds exactly for geodesic balls.
inline double star_domain_lower_bound(const DomainScalars& s, int n, const SteklovResult& mu1_ball) {
  if (n < 2) throw DomainError("dimension must be >= 2");
  if (!(s.R_m > 0.0) || s.R_m > s.R_M) throw DomainError("need 0 < R_m <= R_M");
  if (!(s.sec_alpha >= 1.0)) throw DomainError("sec(alpha) must be >= 1");
  const double sine_ratio = std::pow(std::sin(s.R_m) / std::sin(s.R_M), n - 1);
  return (s.R_m / s.R_M) * gradient_balance_factor(s.a) * sine_ratio / s.sec_alpha * mu1_ball.mu1;
}

/// Compares the star-domain bound with a computed mu1(Omega). Without a
/// reference eigenvalue the verdict is NotComparable.
inline BoundReport star_domain_check(const DomainScalars& s, int n, const SteklovResult& mu1_ball,
                                     const std::optional<SteklovResult>& mu1_domain,
                                     double rel_tol = kVerdictRelTol) {
  BoundReport rep;
  rep.bound_name = "star_domain_lower";
  rep.lower = star_domain_lower_bound(s, n, mu1_ball);
  rep.mu1_reference = mu1_domain;
  rep.inputs_echo = {{"n", n},
                     {"R_m", s.R_m},
                     {"R_M", s.R_M},
                     {"a", s.a},
                     {"sec_alpha", s.sec_alpha},
                     {"sec_alpha_source", "sqrt(1+a)"},
                     {"mu1_ball", mu1_ball.mu1},
                     {"rel_tol", rel_tol}};
  if (mu1_domain) {
    rep.margin = mu1_domain->mu1 - *rep.lower;
    rep.verdict = judge(rep.margin, mu1_domain->mu1, rel_tol);
  } else {
    rep.margin = std::numeric_limits<double>::quiet_NaN();
    rep.verdict = Verdict::NotComparable;
  }
  return rep;
}

/// Two-sided comparison of mu1(B_R, g) with mu1(B_R, can_k) under a radial
/// curvature bound. With q = (sin_k R / sigma(R))^{n+1}:
///   K >= k:  mu_can <= mu_g <= q mu_can
///   K <= k:  q mu_can <= mu_g <= mu_can
template <WarpingFamily F>
BoundReport curvature_sandwich(const WarpedProfile<F>& p, double k, CurvatureSide side, const SteklovResult& mu_g,
                               const SteklovResult& mu_can, int samples = 1000,
                               double rel_tol = kVerdictRelTol) {
  const auto curv = check_curvature_bound(p, k, side, samples);
  if (!curv.holds)
    throw PreconditionError("radial curvature bound " + std::string(to_string(side)) + " " + std::to_string(k) +
                            " fails at r = " + std::to_string(curv.worst_r));
  const double R = p.radius();
  const int n = p.dimension();
  const double q = std::pow(sin_k(SpaceFormParam{k}, R) / p.sigma(R), n + 1);

  BoundReport rep;
  rep.bound_name = side == CurvatureSide::AtLeast ? "curvature_sandwich_at_least" : "curvature_sandwich_at_most";
  rep.lower = side == CurvatureSide::AtLeast ? mu_can.mu1 : q * mu_can.mu1;
  rep.upper = side == CurvatureSide::AtLeast ? q * mu_can.mu1 : mu_can.mu1;
  rep.mu1_reference = mu_g;
  rep.margin = std::min(mu_g.mu1 - *rep.lower, *rep.upper - mu_g.mu1);
  rep.verdict = judge(rep.margin, mu_g.mu1, rel_tol);
  rep.inputs_echo = {{"n", n},
                     {"R", R},
                     {"k", k},
                     {"side", std::string(to_string(side))},
                     {"sigma_R", p.sigma(R)},
                     {"sin_k_R", sin_k(SpaceFormParam{k}, R)},
                     {"ratio_power", q},
                     {"mu_can", mu_can.mu1},
                     {"curvature_worst_margin", curv.worst_margin},
                     {"rel_tol", rel_tol}};
  return rep;
}

/// Planar star-domain bound for r < R(theta):
///
///   [1 - 2 / (1 + sqrt(1 + 4 min (R/R')^2))] / max sqrt(R^2 + R'^2)
///
/// evaluated on M uniform nodes, with (R/R')^2 = +inf where |R'| <= 1e-14 so
/// a circle of radius c gives exactly 1/c.
template <class Radius, class Slope>
double kuttler_sigillito_bound(const Radius& R, const Slope& dR, int M) {
  if (M < 10000) throw DomainError("Kuttler-Sigillito evaluation needs M >= 1e4 nodes");
  double min_ratio_sq = std::numeric_limits<double>::infinity();
  double max_len = 0.0;
  for (int i = 0; i < M; ++i) {
    const double t = 2.0 * std::numbers::pi * i / M;
    const double r = R(t);
    const double dr = dR(t);
    if (!(r > 0.0)) throw DomainError("radial function must be positive");
    if (std::abs(dr) > 1e-14) min_ratio_sq = std::min(min_ratio_sq, (r / dr) * (r / dr));
    max_len = std::max(max_len, std::sqrt(r * r + dr * dr));
  }
  const double factor = std::isinf(min_ratio_sq) ? 1.0 : 1.0 - 2.0 / (1.0 + std::sqrt(1.0 + 4.0 * min_ratio_sq));
  return factor / max_len;
}

inline double kuttler_sigillito_bound(const FourierRadius& shape, int M = kDefaultScanPoints) {
  return kuttler_sigillito_bound([&shape](double t) { return shape.value(t); },
                                 [&shape](double t) { return shape.derivative(t); }, M);
}

/// Star-domain bound in R^n:
///   R_m^{n-2} / R_M^{n-1} * (2 + a - sqrt(a^2 + 4a)) / (2 sqrt(a + 1)).
/// Written as (R_m/R_M)^{n-2} / R_M * ... so a ball gives exactly 1/R.
inline double garcia_montano_bound(double R_m, double R_M, double a, int n) {
  if (!(R_m > 0.0) || R_m > R_M || !std::isfinite(R_M)) throw DomainError("need 0 < R_m <= R_M");
  if (n < 2) throw DomainError("dimension must be >= 2");
  return std::pow(R_m / R_M, n - 2) / R_M * gradient_balance_factor(a) / std::sqrt(a + 1.0);
}

}  // namespace steklov
