#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

namespace qes {

using Complex = std::complex<double>;

/// Throws NumericOverflow if `value` has a non-finite component.
Complex checked(Complex value, const char* context);

/// Dense complex-coefficient polynomial in one variable.
///
/// Coefficient k multiplies z^k. The stored form is trimmed: the highest
/// stored coefficient is nonzero, and the zero polynomial stores nothing.
/// Only exact 0.0 + 0.0i counts as zero for trimming, so roundoff-sized
/// coefficients survive and remain visible to residual checks.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Complex> coeffs);
  Polynomial(std::initializer_list<Complex> coeffs);

  static Polynomial monomial(std::size_t k, Complex c = 1.0);
  static Polynomial constant(Complex c) { return Polynomial{c}; }

  bool is_zero() const noexcept { return coeffs_.empty(); }

  /// Degree, or std::nullopt for the zero polynomial.
  std::optional<std::size_t> degree() const noexcept;

  /// Coefficient of z^k; zero beyond the stored range.
  Complex operator[](std::size_t k) const noexcept { return k < coeffs_.size() ? coeffs_[k] : Complex{}; }

  std::span<const Complex> coeffs() const noexcept { return coeffs_; }
  std::size_t size() const noexcept { return coeffs_.size(); }

  /// Largest coefficient magnitude; 0 for the zero polynomial.
  double max_abs_coeff() const noexcept;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  void trim();

  std::vector<Complex> coeffs_;
};

Polynomial operator+(const Polynomial& p, const Polynomial& q);
Polynomial operator-(const Polynomial& p, const Polynomial& q);
Polynomial operator-(const Polynomial& p);
Polynomial operator*(Complex c, const Polynomial& p);
inline Polynomial operator*(const Polynomial& p, Complex c) { return c * p; }

/// Convolution product. Throws NumericOverflow on non-finite coefficients.
Polynomial poly_mul(const Polynomial& p, const Polynomial& q);
inline Polynomial operator*(const Polynomial& p, const Polynomial& q) { return poly_mul(p, q); }

/// Formal derivative d/dz.
Polynomial poly_derivative(const Polynomial& p);

/// Horner evaluation. Throws NumericOverflow on a non-finite result.
Complex poly_eval(const Polynomial& p, Complex z);

/// Multiplies by z^k.
Polynomial shift_up(const Polynomial& p, std::size_t k);

}  // namespace qes
