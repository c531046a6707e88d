#include "qes/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>
#include <vector>

#include "qes/error.hpp"
#include "qes/tridiagonal.hpp"

namespace qes {

namespace {

// exp(x) underflows to zero below this.
constexpr double kUnderflowExponent = -745.0;

Complex exp_or_zero(Complex exponent) {
  if (exponent.real() < kUnderflowExponent) return 0.0;
  return checked(std::exp(exponent), "gauge factor");
}

// -G(x) for the Morse gauge, with the far-field limits handled explicitly.
std::optional<Complex> morse_exponent(const MorseParams& m, double x) {
  const double ex = std::exp(x);
  const double emx = std::exp(-x);
  if (!std::isfinite(ex)) {
    if (m.d.real() > 0.0) return std::nullopt;
    throw NumericOverflow("Morse gauge factor diverges at x = " + std::to_string(x));
  }
  if (!std::isfinite(emx)) {
    if (m.a.real() > 0.0) return std::nullopt;
    throw NumericOverflow("Morse gauge factor diverges at x = " + std::to_string(x));
  }
  return -(m.d * ex + m.a * emx + m.b * x);
}

double simpson(const Wavefunction& w, double lo, double hi, long n) {
  const double h = (hi - lo) / static_cast<double>(n);
  auto f = [&](double x) { return std::norm(psi_eval(w, x)); };
  double acc = f(lo) + f(hi);
  for (long i = 1; i < n; ++i) acc += (i % 2 == 1 ? 4.0 : 2.0) * f(lo + h * static_cast<double>(i));
  return acc * h / 3.0;
}

}  // namespace

Complex psi_eval(const Wavefunction& w, double x) {
  const auto& model = w.model;
  const auto& phi = w.solution.phi;
  if (model.family == Family::sextic) {
    const double x2 = x * x;
    const Complex exponent = -(0.25 * x2 * x2 + 0.5 * model.sextic().a * x2);
    const Complex gauge = exp_or_zero(exponent);
    if (gauge == Complex{}) return 0.0;
    Complex value = poly_eval(phi, x2) * gauge;
    if (model.sextic().sector == Sector::odd) value *= x;
    return checked(value, "psi_eval");
  }
  const auto exponent = morse_exponent(model.morse(), x);
  if (!exponent) return 0.0;
  const Complex gauge = exp_or_zero(*exponent);
  if (gauge == Complex{}) return 0.0;
  return checked(poly_eval(phi, std::exp(-x)) * gauge, "psi_eval");
}

Polynomial residual_polynomial(const QesModel& model, const Polynomial& phi, Complex energy) {
  const auto d1 = poly_derivative(phi);
  const auto d2 = poly_derivative(d1);
  return model.ode.p2 * d2 + model.ode.p1 * d1 + model.ode.p0 * phi - energy * phi;
}

double residual_sup(const Wavefunction& w, std::span<const double> xs) {
  if (xs.empty()) throw ValidationError("residual_sup: empty sample");
  const auto& model = w.model;
  const auto& phi = w.solution.phi;
  const Complex energy = w.solution.energy_base;

  const auto applied = residual_polynomial(model, phi, 0.0);
  const auto r = applied - energy * phi;
  double scale = std::max(applied.max_abs_coeff(), std::abs(energy) * phi.max_abs_coeff());
  if (scale == 0.0) scale = 1.0;

  double worst = 0.0;
  for (double x : xs) worst = std::max(worst, std::abs(poly_eval(r, change_variable(model, x))));
  return worst / scale;
}

std::vector<double> default_residual_sample(Family family) {
  const double lo = family == Family::sextic ? -1.5 : -0.8;
  const double hi = family == Family::sextic ? 1.5 : 3.0;
  std::vector<double> xs(41);
  for (std::size_t i = 0; i < xs.size(); ++i) xs[i] = lo + (hi - lo) * static_cast<double>(i) / 40.0;
  return xs;
}

double norm_squared(const Wavefunction& w) {
  double center = 0.0;
  if (w.model.family == Family::morse) {
    const auto& m = w.model.morse();
    if (m.a.real() <= 0.0 || m.d.real() <= 0.0) {
      throw ValidationError("norm_squared: Morse wavefunction needs Re a > 0 and Re d > 0 to decay");
    }
    center = 0.5 * std::log(m.a.real() / m.d.real());
  }

  double half = 4.0;
  long n = 128;
  double prev = simpson(w, center - half, center + half, n);
  for (; n < (1L << 22); n *= 2) {
    const double next = simpson(w, center - half, center + half, 2 * n);
    const bool done = std::abs(next - prev) <= 1e-13 * std::abs(next);
    prev = next;
    if (done) {
      n *= 2;
      break;
    }
  }

  for (int doubling = 0; doubling < 8; ++doubling) {
    half *= 2.0;
    n *= 2;
    const double next = simpson(w, center - half, center + half, n);
    const bool done = std::abs(next - prev) < 1e-12 * std::abs(next);
    prev = next;
    if (done) break;
  }
  if (!std::isfinite(prev)) throw NumericOverflow("norm_squared: non-finite integral");
  return prev;
}

bool is_pt_symmetric(const QesModel& model, Complex shift, double tol) {
  if (model.family == Family::sextic) {
    const auto c = potential_coefficients(model);
    auto real_enough = [&](Complex v) { return std::abs(v.imag()) <= tol * std::max(1.0, std::abs(v)); };
    return std::all_of(c.begin(), c.end(), real_enough) && real_enough(shift);
  }
  double worst = 0.0, scale = 0.0;
  for (int i = 0; i < 64; ++i) {
    const double x = -3.0 + 6.0 * i / 63.0;
    const Complex v = potential_eval(model, x, shift);
    const Complex reflected = std::conj(potential_eval(model, -x, shift));
    worst = std::max(worst, std::abs(reflected - v));
    scale = std::max(scale, std::abs(v));
  }
  return worst <= tol * std::max(scale, 1.0);
}

std::optional<Complex> SusyPartner::superpotential(double x) const {
  if (is_pole(x)) return std::nullopt;
  return gauge_.w(x);
}

std::optional<Complex> SusyPartner::v_minus(double x) const {
  if (is_pole(x)) return std::nullopt;
  const Complex w = gauge_.w(x);
  return w * w - gauge_.dw(x);
}

std::optional<Complex> SusyPartner::v_plus(double x) const {
  if (is_pole(x)) return std::nullopt;
  const Complex w = gauge_.w(x);
  return w * w + gauge_.dw(x);
}

std::optional<Complex> SusyPartner::two_dw(double x) const {
  if (is_pole(x)) return std::nullopt;
  return 2.0 * gauge_.dw(x);
}

void GridSpec::validate() const {
  if (!(x_min < x_max)) throw ValidationError("GridSpec: x_min must be below x_max");
  if (n_points < 64) throw ValidationError("GridSpec: n_points must be at least 64");
}

GridSpec default_grid(Family family, int n_points) {
  if (family == Family::sextic) return {-6.0, 6.0, n_points};
  return {-12.0, 4.0, n_points};
}

FdResult fd_refine(const std::function<Complex(double)>& potential, const GridSpec& grid, Complex predicted) {
  grid.validate();
  const auto n = static_cast<std::size_t>(grid.n_points);
  const double h = grid.step();
  const double off = -1.0 / (h * h);

  std::vector<Complex> diag(n);
  for (std::size_t i = 0; i < n; ++i) {
    diag[i] = 2.0 / (h * h) + potential(grid.x_min + h * static_cast<double>(i + 1));
  }
  const std::vector<Complex> band(n - 1, off);

  auto apply_h = [&](const std::vector<Complex>& v, std::vector<Complex>& out) {
    for (std::size_t i = 0; i < n; ++i) {
      Complex acc = diag[i] * v[i];
      if (i > 0) acc += off * v[i - 1];
      if (i + 1 < n) acc += off * v[i + 1];
      out[i] = acc;
    }
  };

  double delta = 1e-4;
  std::optional<TridiagonalLu> lu;
  for (int attempt = 0; attempt <= 5 && !lu; ++attempt) {
    std::vector<Complex> shifted(diag);
    for (auto& d : shifted) d -= predicted + delta;
    try {
      lu.emplace(band, shifted, band);
    } catch (const NumericOverflow&) {
      delta *= 2.0;
    }
  }
  if (!lu) throw ConvergenceFailure("fd_refine: shifted Hamiltonian stayed singular", {predicted}, 0.0);

  std::mt19937_64 rng(20240611);
  std::uniform_real_distribution<double> unif(-1.0, 1.0);
  std::vector<Complex> v(n), hv(n);
  for (auto& x : v) x = {unif(rng), unif(rng)};

  Complex rho = predicted;
  for (int iter = 1; iter <= 200; ++iter) {
    lu->solve(v);
    double vmax = 0.0;
    for (const auto& x : v) vmax = std::max(vmax, std::abs(x));
    if (!(vmax > 0.0) || !std::isfinite(vmax)) throw NumericOverflow("fd_refine: iterate became non-finite");
    for (auto& x : v) x /= vmax;

    apply_h(v, hv);
    Complex num{}, den{};
    double vnorm2 = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      num += v[i] * hv[i];
      den += v[i] * v[i];
      vnorm2 += std::norm(v[i]);
    }
    if (std::abs(den) < 1e-8 * vnorm2) {
      // Nearly self-orthogonal in the bilinear form; fall back to the Hermitian quotient.
      num = {};
      for (std::size_t i = 0; i < n; ++i) num += std::conj(v[i]) * hv[i];
      den = vnorm2;
    }
    const Complex next = num / den;
    const bool converged = iter > 1 && std::abs(next - rho) < 1e-10 * std::max(1.0, std::abs(next));
    rho = next;
    if (converged) return {rho, std::abs(rho - predicted), iter, delta};
  }
  throw ConvergenceFailure("fd_refine: inverse iteration did not converge in 200 iterations", {rho},
                           std::abs(rho - predicted));
}

FdResult fd_verify(const QesModel& model, const QesSolution& solution, const GridSpec& grid) {
  const Complex shift = solution.shift;
  return fd_refine([&](double x) { return potential_eval(model, x, shift); }, grid, solution.energy_shifted);
}

FdConvergence fd_convergence(const QesModel& model, const QesSolution& solution, const GridSpec& grid) {
  FdConvergence out;
  out.coarse = fd_verify(model, solution, grid);
  out.fine = fd_verify(model, solution, grid.refined());
  out.ratio = out.fine.defect > 0.0 ? out.coarse.defect / out.fine.defect : 0.0;
  return out;
}

}  // namespace qes
