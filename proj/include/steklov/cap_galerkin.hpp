#pragma once

// mu1 of a star-shaped Omega in S^2 by Rayleigh-Ritz over harmonic
// polynomials.
//
// Stereographic projection from the antipode of the centre sends the point
// at geodesic distance r to |z| = tan(r/2) and pulls the round metric back to
// lambda(z)^2 |dz|^2 with lambda = 2 / (1 + |z|^2). Dirichlet energy is
// conformally invariant in two dimensions and harmonic functions stay
// harmonic, so only the boundary measure picks up the weight lambda:
//
//   mu1 = min  int_D |grad u|^2 dx / oint u^2 lambda ds,   oint u lambda ds = 0.
//
// Trial space span{1, Re w^j, Im w^j : 1 <= j <= K} with w = z / rho_s.
// Both Gram matrices are boundary integrals (Green's identity for the energy)
// evaluated by the periodic trapezoid rule in the polar angle.

#include <cmath>
#include <complex>
#include <numbers>
#include <string>
#include <vector>

#include "steklov/error.hpp"
#include "steklov/quadrature.hpp"
#include "steklov/star_domain.hpp"
#include "steklov/steklov_result.hpp"
#include "steklov/sym_geneig.hpp"

namespace steklov {

struct GalerkinConfig {
  int degree = 16;       // K
  int quad_points = 512;  // M

  void validate() const {
    if (degree < 4 || degree > 40) throw ValidationError("K", "harmonic degree must lie in [4, 40]");
    if (quad_points < 16 * degree) throw ValidationError("M", "need at least 16 K boundary nodes");
  }
};

/// Basis layout: index 0 is the constant, 2j-1 is Re w^j, 2j is Im w^j.
/// `basis_radius` is rho_s; pass <= 0 to use tan(R_M / 2).
inline SymmetricPencil assemble_cap_pencil(const StarDomain& d, const GalerkinConfig& cfg, double basis_radius = 0.0) {
  if (d.dimension() != 2) throw ValidationError("n", "the conformal Galerkin solver handles n = 2 only");
  cfg.validate();
  const int K = cfg.degree;
  const int M = cfg.quad_points;
  const std::size_t dim = 2 * K + 1;

  if (basis_radius <= 0.0) {
    const double R_M = scan_max([&d](double t) { return d.radius(t); }, 0.0, d.period(), d.scan_points(), true).value;
    basis_radius = std::tan(0.5 * R_M);
  }

  SymmetricPencil P{DenseMatrix(dim), DenseMatrix(dim)};
  std::vector<double> value(dim), flux(dim);
  const double dphi = 2.0 * std::numbers::pi / M;
  const std::complex<double> minus_i(0.0, -1.0);

  for (int node = 0; node < M; ++node) {
    const double phi = dphi * node;
    const double R = d.radius(phi);
    const double half_cos = std::cos(0.5 * R);
    const double rho = std::tan(0.5 * R);
    const double drho = d.radius_derivative(phi) / (2.0 * half_cos * half_cos);
    const std::complex<double> e = std::polar(1.0, phi);
    const std::complex<double> dz = std::complex<double>(drho, rho) * e;  // dz/dphi
    const double lambda = 2.0 / (1.0 + rho * rho);
    const double speed = std::abs(dz);
    const std::complex<double> w = rho * e / basis_radius;
    // outward normal times plane arc length: n ds = -i dz
    const std::complex<double> n_ds = minus_i * dz;

    value[0] = 1.0;
    flux[0] = 0.0;
    std::complex<double> w_pow(1.0, 0.0);  // w^{j-1}
    for (int j = 1; j <= K; ++j) {
      // grad of Re f dotted with n is Re(f' n), of Im f is Im(f' n)
      const std::complex<double> dflux = static_cast<double>(j) * w_pow / basis_radius * n_ds;
      w_pow *= w;
      value[2 * j - 1] = w_pow.real();
      value[2 * j] = w_pow.imag();
      flux[2 * j - 1] = dflux.real();
      flux[2 * j] = dflux.imag();
    }
    const double mass = lambda * speed * dphi;
    for (std::size_t p = 0; p < dim; ++p)
      for (std::size_t q = 0; q < dim; ++q) {
        P.A(p, q) += value[p] * flux[q] * dphi;
        P.B(p, q) += value[p] * value[q] * mass;
      }
  }
  P.A.symmetrize();
  return P;
}

/// Ascending Ritz values of the cap pencil, after symmetric diagonal
/// equilibration by diag(B).
inline std::vector<double> cap_spectrum(const StarDomain& d, const GalerkinConfig& cfg) {
  SymmetricPencil P = assemble_cap_pencil(d, cfg);
  const std::size_t n = P.dim();
  std::vector<double> scale(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!(P.B(i, i) > 0.0)) throw SolverError("boundary mass matrix is not positive definite");
    scale[i] = 1.0 / std::sqrt(P.B(i, i));
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      P.A(i, j) *= scale[i] * scale[j];
      P.B(i, j) *= scale[i] * scale[j];
    }
  return solve_sym_geneig(P);
}

namespace detail {

// The lowest Ritz value belongs to the constants; the next one is mu1.
inline double first_nonzero(const std::vector<double>& eig) {
  if (eig.size() < 2 || !(eig[1] > 0.0)) throw SolverError("pencil has no positive eigenvalue");
  return eig[1];
}

}  // namespace detail

/// Galerkin estimate of mu1(Omega) (an upper bound); err_estimate compares
/// degrees K and K-2.
inline SteklovResult cap_mu1(const StarDomain& d, const GalerkinConfig& cfg = {}) {
  cfg.validate();
  const double fine = detail::first_nonzero(cap_spectrum(d, cfg));
  const double coarse = detail::first_nonzero(cap_spectrum(d, {cfg.degree - 2, cfg.quad_points}));
  SteklovResult out;
  out.mu1 = fine;
  out.method = SteklovMethod::CapGalerkin;
  out.step_or_degree = cfg.degree;
  out.err_estimate = std::abs(fine - coarse);
  out.under_resolved = out.err_estimate > 1e-4 * std::abs(fine);
  return out;
}

}  // namespace steklov
