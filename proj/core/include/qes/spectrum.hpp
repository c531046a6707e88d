#pragma once

#include <optional>
#include <span>
#include <vector>

#include "qes/cpoly.hpp"
#include "qes/families.hpp"
#include "qes/sl2.hpp"

namespace qes {

/// Largest block handled by the char-poly route.
inline constexpr std::size_t kMaxBlockDim = 32;

/// det(λI - M) by the Faddeev–LeVerrier recurrence. Monic.
Polynomial char_poly(const BlockMatrix& m);

struct RootOptions {
  double tol = 1e-13;
  int max_iterations = 500;
};

/// All complex roots of `p` by Aberth–Ehrlich simultaneous iteration,
/// sorted by (real, imag).
///
/// A root stops moving once its Newton–Aberth update falls below
/// tol·max(1,|z|) or |p(z)| drops to the Horner roundoff level. Throws
/// ConvergenceFailure (carrying the last iterate) after max_iterations.
std::vector<Complex> poly_roots(const Polynomial& p, const RootOptions& opts = {});

struct EigenPair {
  Complex value;
  /// Eigenvector as φ coefficients, first significant entry equal to 1.
  Polynomial vector;
  /// Size of the root cluster this eigenvalue belongs to.
  int multiplicity = 1;
  /// ‖Mv - λv‖∞ / (‖M‖∞ ‖v‖∞).
  double residual = 0.0;

  bool degenerate() const noexcept { return multiplicity > 1; }
};

/// Roots closer than this (relative to max(1,|λ|)) are treated as one
/// degenerate eigenvalue.
inline constexpr double kClusterTolerance = 1e-7;

/// Eigenpairs of `m`, one per root of the characteristic polynomial,
/// ordered like poly_roots. Degenerate clusters share their mean value and
/// one eigenvector.
std::vector<EigenPair> eigen_solve(const BlockMatrix& m, const RootOptions& opts = {});

/// Null vector of (m - λI) by Gaussian elimination with complete pivoting;
/// the coordinate of the smallest pivot is set to 1.
std::vector<Complex> null_vector(const BlockMatrix& m, Complex lambda);

struct CommonShift {
  /// -i·(median imaginary part), present only if every eigenvalue's
  /// imaginary part lies within tol of the median.
  std::optional<Complex> shift;
  double spread = 0.0;

  bool found() const noexcept { return shift.has_value(); }
};

CommonShift common_imaginary_shift(std::span<const Complex> eigs, double tol = 1e-9);

struct QesSolution {
  Complex energy_base;
  Complex energy_shifted;
  Complex shift;
  Polynomial phi;
  double eigvec_residual = 0.0;
  int multiplicity = 1;
};

struct QesSpectrum {
  std::vector<QesSolution> levels;
  CommonShift common;
};

/// Builds the model's block, solves it and applies the common shift
/// (zero shift when none exists).
QesSpectrum solve_model(const QesModel& model, const RootOptions& opts = {});

}  // namespace qes
