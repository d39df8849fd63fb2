#pragma once

// Star-shaped domains of the round sphere S^n described as radial graphs in
// geodesic polar coordinates about a centre p:
//
//   Omega = { exp_p(t u) : 0 <= t < R(u) }.
//
// n = 2: R(phi) = R0 + sum_j eps_j cos(m_j phi + phase_j), phi in [0, 2 pi).
// n = 3: zonal, R(theta) = R0 + sum_j eps_j cos(m_j theta), theta the polar
//        angle of the direction sphere S^2; the tangential gradient of R is
//        then dR/dtheta.

#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "steklov/error.hpp"
#include "steklov/quadrature.hpp"

namespace steklov {

struct ShapeMode {
  double eps = 0.0;
  int m = 0;
  double phase = 0.0;
};

/// R0 + sum eps cos(m t + phase) and its derivative. No range checks; also
/// used for planar radial graphs.
struct FourierRadius {
  double R0 = 1.0;
  std::vector<ShapeMode> modes;

  double value(double t) const {
    double r = R0;
    for (const auto& md : modes) r += md.eps * std::cos(md.m * t + md.phase);
    return r;
  }
  double derivative(double t) const {
    double d = 0.0;
    for (const auto& md : modes) d -= md.eps * md.m * std::sin(md.m * t + md.phase);
    return d;
  }
};

inline constexpr int kDefaultScanPoints = 10000;
inline constexpr int kZonalQuadratureNodes = 400;

class StarDomain {
 public:
  StarDomain(int n, double R0, std::vector<ShapeMode> modes = {}, int scan_points = kDefaultScanPoints)
      : n_(n), radius_{R0, std::move(modes)}, scan_points_(scan_points) {
    if (n_ != 2 && n_ != 3) throw ValidationError("n", "star domains are supported for n = 2 and n = 3");
    if (!(R0 > 0.0) || !std::isfinite(R0)) throw ValidationError("R0", "must be positive and finite");
    if (scan_points_ < kDefaultScanPoints)
      throw ValidationError("M", "scan grid needs at least " + std::to_string(kDefaultScanPoints) + " points");
    for (const auto& md : radius_.modes) {
      if (!std::isfinite(md.eps) || !std::isfinite(md.phase)) throw ValidationError("modes", "eps and phase must be finite");
      if (md.m < 0) throw ValidationError("modes", "mode number m must be >= 0");
      if (n_ == 3 && md.phase != 0.0) throw ValidationError("modes", "zonal (n = 3) modes take no phase");
    }
    constexpr double kHalfPi = std::numbers::pi / 2.0;
    const Extremum lo = scan_min([this](double t) { return radius(t); }, 0.0, period(), scan_points_, periodic());
    const Extremum hi = scan_max([this](double t) { return radius(t); }, 0.0, period(), scan_points_, periodic());
    if (!(lo.value > 0.0)) throw ValidationError("R", "radial graph must stay positive", lo.arg);
    if (hi.value > kHalfPi * (1.0 + 1e-15)) throw ValidationError("R", "radial graph exceeds pi/2", hi.arg);
  }

  int dimension() const noexcept { return n_; }
  int scan_points() const noexcept { return scan_points_; }
  const FourierRadius& shape() const noexcept { return radius_; }

  /// Direction parameter range: [0, 2 pi) for n = 2, [0, pi] for n = 3.
  double period() const noexcept { return n_ == 2 ? 2.0 * std::numbers::pi : std::numbers::pi; }
  bool periodic() const noexcept { return n_ == 2; }

  double radius(double t) const { return radius_.value(t); }
  /// |tangential gradient of R| in the unit direction sphere.
  double radius_derivative(double t) const { return radius_.derivative(t); }

 private:
  int n_;
  FourierRadius radius_;
  int scan_points_;
};

struct DomainScalars {
  double R_m = 0.0;
  double R_M = 0.0;
  // max |grad R|^2 / sin^2 R over the boundary
  double a = 0.0;
  // sqrt(1 + a): the normal makes angle theta with d/dr where
  // tan theta = |grad R| / sin R, so the extremes coincide.
  double sec_alpha = 1.0;
  double boundary_area = 0.0;
};

inline DomainScalars domain_scalars(const StarDomain& d) {
  const int M = d.scan_points();
  const double T = d.period();
  const bool periodic = d.periodic();
  auto R = [&d](double t) { return d.radius(t); };
  auto slope = [&d](double t) {
    const double s = std::sin(d.radius(t));
    const double g = d.radius_derivative(t);
    return g * g / (s * s);
  };

  DomainScalars out;
  out.R_m = scan_min(R, 0.0, T, M, periodic).value;
  out.R_M = scan_max(R, 0.0, T, M, periodic).value;
  out.a = std::max(0.0, scan_max(slope, 0.0, T, M, periodic).value);
  out.sec_alpha = std::sqrt(1.0 + out.a);

  // ds = sec(theta) sin^{n-1}(R) du = sin^{n-2}(R) sqrt(sin^2 R + |grad R|^2) du
  auto density = [&d](double t) {
    const double s = std::sin(d.radius(t));
    const double g = d.radius_derivative(t);
    return std::sqrt(s * s + g * g);
  };
  if (d.dimension() == 2) {
    // periodic trapezoid, spectrally accurate
    double sum = 0.0;
    for (int i = 0; i < M; ++i) sum += density(T * i / M);
    out.boundary_area = sum * T / M;
  } else {
    // Zonal: du = sin(theta) dtheta dphi; Gauss-Legendre in z = cos(theta)
    // where the integrand is smooth.
    const QuadratureRule q = gauss_legendre(kZonalQuadratureNodes);
    double sum = 0.0;
    for (std::size_t i = 0; i < q.nodes.size(); ++i) {
      const double t = std::acos(q.nodes[i]);
      sum += q.weights[i] * std::sin(d.radius(t)) * density(t);
    }
    out.boundary_area = 2.0 * std::numbers::pi * sum;
  }
  return out;
}

inline bool is_geodesic_ball(const StarDomain& d, double tol) {
  const DomainScalars s = domain_scalars(d);
  return s.R_M - s.R_m <= tol;
}

}  // namespace steklov
