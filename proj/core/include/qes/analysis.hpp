#pragma once

#include <functional>
#include <optional>
#include <span>

#include "qes/families.hpp"
#include "qes/spectrum.hpp"

namespace qes {

/// ψ(x) = φ(z(x))·exp(-G(x)) for one QES level of a model.
struct Wavefunction {
  QesModel model;
  QesSolution solution;
};

/// Evaluates ψ at x. Values whose gauge factor underflows are returned as
/// exact zero; the odd sextic sector is evaluated as x·φ(x²)·e^{-x⁴/4-ax²/2}.
/// Throws NumericOverflow if the gauge factor grows without bound.
Complex psi_eval(const Wavefunction& w, double x);

/// p2 φ'' + p1 φ' + (p0 - E) φ as an exact polynomial in z.
Polynomial residual_polynomial(const QesModel& model, const Polynomial& phi, Complex energy);

/// max over `xs` of |R(z(x))| divided by the largest coefficient of
/// p2 φ'' + p1 φ' + p0 φ, with R from residual_polynomial at the base
/// energy. Roundoff-sized for a genuine eigenpair.
double residual_sup(const Wavefunction& w, std::span<const double> xs);

/// Default residual sample for a family: 41 points where |z| stays O(1).
std::vector<double> default_residual_sample(Family family);

/// ∫|ψ|² dx by composite Simpson. The step is refined on a core interval,
/// then the interval is doubled at fixed step until the added tail is below
/// 1e-12 of the total. Throws ValidationError for a Morse gauge that does
/// not decay (Re a <= 0 or Re d <= 0).
double norm_squared(const Wavefunction& w);

/// V*(-x) == V(x), shift included.
///
/// Sextic potentials contain only even powers, so the test reduces to all
/// coefficients (and the shift) being real. Morse is checked pointwise on
/// 64 samples in [-3, 3] against tol·max|V|.
bool is_pt_symmetric(const QesModel& model, Complex shift, double tol = 1e-12);

/// Supersymmetric pair built from the model's superpotential:
/// V₋ = W² - W', V₊ = W² + W', so V₊ - V₋ = 2W'. Evaluations at the pole
/// of the odd-sector superpotential (x = 0) return std::nullopt.
class SusyPartner {
 public:
  explicit SusyPartner(const QesModel& model) : gauge_(model.gauge), odd_(model.is_odd_sextic()) {}

  std::optional<Complex> superpotential(double x) const;
  std::optional<Complex> v_minus(double x) const;
  std::optional<Complex> v_plus(double x) const;
  std::optional<Complex> two_dw(double x) const;
  bool is_pole(double x) const noexcept { return odd_ && x == 0.0; }

 private:
  GaugeSpec gauge_;
  bool odd_;
};

inline SusyPartner susy_partner(const QesModel& model) { return SusyPartner(model); }

/// Uniform grid with `n_points` interior nodes and Dirichlet ends.
struct GridSpec {
  double x_min = -6.0;
  double x_max = 6.0;
  int n_points = 2000;

  double step() const { return (x_max - x_min) / (n_points + 1); }
  /// Same interval, half the step.
  GridSpec refined() const { return {x_min, x_max, 2 * n_points + 1}; }
  void validate() const;
};

/// Sextic [-6, 6]; Morse [-12, 4].
GridSpec default_grid(Family family, int n_points = 2000);

struct FdResult {
  Complex refined_energy;
  double defect = 0.0;  // |refined - predicted|
  int iterations = 0;
  double offset = 0.0;  // shift offset that gave a usable factorization
};

/// Inverse iteration on the central-difference Hamiltonian -d²/dx² + V,
/// shifted to predicted + 1e-4. Converged when successive unconjugated
/// Rayleigh quotients agree to 1e-10.
FdResult fd_refine(const std::function<Complex(double)>& potential, const GridSpec& grid, Complex predicted);

/// fd_refine on the model's shifted potential around the level's shifted energy.
FdResult fd_verify(const QesModel& model, const QesSolution& solution, const GridSpec& grid);

struct FdConvergence {
  FdResult coarse;
  FdResult fine;
  /// coarse.defect / fine.defect; ≈ 4 for second-order convergence.
  double ratio = 0.0;
};

FdConvergence fd_convergence(const QesModel& model, const QesSolution& solution, const GridSpec& grid);

}  // namespace qes
