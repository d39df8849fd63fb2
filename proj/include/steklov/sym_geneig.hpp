#pragma once

// Dense symmetric-definite generalized eigenproblem A c = mu B c.
//
// B = L L^T (Cholesky), C = L^{-1} A L^{-T}, then cyclic Jacobi rotations
// on C. Sized for Rayleigh-Ritz pencils of a few dozen unknowns.

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "steklov/error.hpp"

namespace steklov {

/// Square row-major matrix.
class DenseMatrix {
 public:
  DenseMatrix() = default;
  explicit DenseMatrix(std::size_t n, double fill = 0.0) : n_(n), data_(n * n, fill) {}

  static DenseMatrix identity(std::size_t n) {
    DenseMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
  }

  std::size_t size() const noexcept { return n_; }
  double& operator()(std::size_t i, std::size_t j) noexcept { return data_[i * n_ + j]; }
  double operator()(std::size_t i, std::size_t j) const noexcept { return data_[i * n_ + j]; }

  double max_asymmetry() const noexcept {
    double worst = 0.0;
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = i + 1; j < n_; ++j) worst = std::max(worst, std::abs((*this)(i, j) - (*this)(j, i)));
    return worst;
  }

  void symmetrize() noexcept {
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = i + 1; j < n_; ++j) {
        const double v = 0.5 * ((*this)(i, j) + (*this)(j, i));
        (*this)(i, j) = v;
        (*this)(j, i) = v;
      }
  }

 private:
  std::size_t n_ = 0;
  std::vector<double> data_;
};

/// A: Dirichlet-energy Gram (symmetric PSD); B: boundary-mass Gram (SPD).
struct SymmetricPencil {
  DenseMatrix A;
  DenseMatrix B;

  std::size_t dim() const noexcept { return A.size(); }
};

inline constexpr double kSymmetryTolerance = 1e-10;

/// Lower-triangular Cholesky factor; throws SolverError if B is not SPD.
inline DenseMatrix cholesky(const DenseMatrix& B) {
  const std::size_t n = B.size();
  DenseMatrix L(n);
  for (std::size_t j = 0; j < n; ++j) {
    double d = B(j, j);
    for (std::size_t k = 0; k < j; ++k) d -= L(j, k) * L(j, k);
    if (!(d > 0.0)) throw SolverError("mass matrix is not positive definite (pivot " + std::to_string(j) + ")");
    L(j, j) = std::sqrt(d);
    for (std::size_t i = j + 1; i < n; ++i) {
      double s = B(i, j);
      for (std::size_t k = 0; k < j; ++k) s -= L(i, k) * L(j, k);
      L(i, j) = s / L(j, j);
    }
  }
  return L;
}

/// Eigenvalues of a symmetric matrix by cyclic Jacobi, ascending. Iterates
/// until the off-diagonal Frobenius norm stalls at roundoff; fails if it
/// has not dropped below 1e-12 * max(1, ||C||_F).
inline std::vector<double> jacobi_eigenvalues(DenseMatrix C) {
  const std::size_t n = C.size();
  auto off_norm = [&C, n] {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (i != j) s += C(i, j) * C(i, j);
    return std::sqrt(s);
  };
  double frob = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) frob += C(i, j) * C(i, j);
  frob = std::sqrt(frob);

  for (int sweep = 0; sweep < 100; ++sweep) {
    if (off_norm() <= 1e-15 * frob) break;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = C(p, q);
        if (apq == 0.0) continue;
        const double theta = (C(q, q) - C(p, p)) / (2.0 * apq);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const double ckp = C(k, p), ckq = C(k, q);
          C(k, p) = c * ckp - s * ckq;
          C(k, q) = s * ckp + c * ckq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double cpk = C(p, k), cqk = C(q, k);
          C(p, k) = c * cpk - s * cqk;
          C(q, k) = s * cpk + c * cqk;
        }
      }
    }
  }
  if (off_norm() > 1e-12 * std::max(1.0, frob)) throw SolverError("Jacobi iteration did not converge");

  std::vector<double> eig(n);
  for (std::size_t i = 0; i < n; ++i) eig[i] = C(i, i);
  std::sort(eig.begin(), eig.end());
  return eig;
}

/// All eigenvalues of A c = mu B c, ascending.
inline std::vector<double> solve_sym_geneig(const SymmetricPencil& P) {
  const std::size_t n = P.dim();
  if (P.B.size() != n) throw SolverError("pencil matrices differ in size");
  if (P.A.max_asymmetry() > kSymmetryTolerance || P.B.max_asymmetry() > kSymmetryTolerance)
    throw SolverError("pencil matrices are not symmetric");
  const DenseMatrix L = cholesky(P.B);

  // X = L^{-1} A
  DenseMatrix X(n);
  for (std::size_t col = 0; col < n; ++col)
    for (std::size_t i = 0; i < n; ++i) {
      double s = P.A(i, col);
      for (std::size_t k = 0; k < i; ++k) s -= L(i, k) * X(k, col);
      X(i, col) = s / L(i, i);
    }
  // C = X L^{-T}, i.e. C^T = L^{-1} X^T
  DenseMatrix C(n);
  for (std::size_t row = 0; row < n; ++row)
    for (std::size_t i = 0; i < n; ++i) {
      double s = X(row, i);
      for (std::size_t k = 0; k < i; ++k) s -= L(i, k) * C(row, k);
      C(row, i) = s / L(i, i);
    }
  C.symmetrize();
  return jacobi_eigenvalues(std::move(C));
}

}  // namespace steklov
