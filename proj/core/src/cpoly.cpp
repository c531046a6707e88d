#include "qes/cpoly.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qes/error.hpp"

namespace qes {

Complex checked(Complex value, const char* context) {
  if (!std::isfinite(value.real()) || !std::isfinite(value.imag())) {
    throw NumericOverflow(std::string("non-finite value in ") + context);
  }
  return value;
}

Polynomial::Polynomial(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) {
  for (const auto& c : coeffs_) checked(c, "polynomial coefficient");
  trim();
}

Polynomial::Polynomial(std::initializer_list<Complex> coeffs) : Polynomial(std::vector<Complex>(coeffs)) {}

Polynomial Polynomial::monomial(std::size_t k, Complex c) {
  std::vector<Complex> v(k + 1);
  v[k] = c;
  return Polynomial(std::move(v));
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == Complex{}) coeffs_.pop_back();
}

std::optional<std::size_t> Polynomial::degree() const noexcept {
  if (coeffs_.empty()) return std::nullopt;
  return coeffs_.size() - 1;
}

double Polynomial::max_abs_coeff() const noexcept {
  double m = 0.0;
  for (const auto& c : coeffs_) m = std::max(m, std::abs(c));
  return m;
}

Polynomial operator+(const Polynomial& p, const Polynomial& q) {
  std::vector<Complex> out(std::max(p.size(), q.size()));
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = p[k] + q[k];
  return Polynomial(std::move(out));
}

Polynomial operator-(const Polynomial& p, const Polynomial& q) {
  std::vector<Complex> out(std::max(p.size(), q.size()));
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = p[k] - q[k];
  return Polynomial(std::move(out));
}

Polynomial operator-(const Polynomial& p) {
  std::vector<Complex> out(p.coeffs().begin(), p.coeffs().end());
  for (auto& c : out) c = -c;
  return Polynomial(std::move(out));
}

Polynomial operator*(Complex c, const Polynomial& p) {
  std::vector<Complex> out(p.coeffs().begin(), p.coeffs().end());
  for (auto& x : out) x *= c;
  return Polynomial(std::move(out));
}

Polynomial poly_mul(const Polynomial& p, const Polynomial& q) {
  if (p.is_zero() || q.is_zero()) return {};
  std::vector<Complex> out(p.size() + q.size() - 1);
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t k = 0; k < q.size(); ++k) out[i + k] += p[i] * q[k];
  }
  for (const auto& c : out) checked(c, "poly_mul");
  return Polynomial(std::move(out));
}

Polynomial poly_derivative(const Polynomial& p) {
  if (p.size() <= 1) return {};
  std::vector<Complex> out(p.size() - 1);
  for (std::size_t k = 1; k < p.size(); ++k) out[k - 1] = static_cast<double>(k) * p[k];
  return Polynomial(std::move(out));
}

Complex poly_eval(const Polynomial& p, Complex z) {
  Complex acc{};
  const auto c = p.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * z + *it;
  return checked(acc, "poly_eval");
}

Polynomial shift_up(const Polynomial& p, std::size_t k) {
  if (p.is_zero()) return {};
  std::vector<Complex> out(p.size() + k);
  std::copy(p.coeffs().begin(), p.coeffs().end(), out.begin() + static_cast<std::ptrdiff_t>(k));
  return Polynomial(std::move(out));
}

}  // namespace qes
