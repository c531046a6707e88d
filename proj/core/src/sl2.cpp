#include "qes/sl2.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qes/error.hpp"

namespace qes {

SpinJ::SpinJ(int two_j) : two_j_(two_j) {
  if (two_j < 0) throw ValidationError("two_j must be non-negative, got " + std::to_string(two_j));
}

Polynomial apply_generator(Generator g, const Polynomial& p, const SpinJ& rep) {
  const Complex j = rep.j();
  switch (g) {
    case Generator::plus:
      return shift_up(poly_derivative(p), 2) - (2.0 * j) * shift_up(p, 1);
    case Generator::zero:
      return shift_up(poly_derivative(p), 1) - j * p;
    case Generator::minus:
      return poly_derivative(p);
  }
  return {};
}

double commutator_defect(const SpinJ& rep) {
  auto act = [&](Generator g, const Polynomial& p) { return apply_generator(g, p, rep); };
  double defect = 0.0;
  for (std::size_t k = 0; k < rep.dim(); ++k) {
    const auto p = Polynomial::monomial(k);
    // [J+, J-] = -2 J0
    const auto c1 = act(Generator::plus, act(Generator::minus, p)) - act(Generator::minus, act(Generator::plus, p)) +
                    2.0 * act(Generator::zero, p);
    // [J0, J+] = J+
    const auto c2 = act(Generator::zero, act(Generator::plus, p)) - act(Generator::plus, act(Generator::zero, p)) -
                    act(Generator::plus, p);
    // [J0, J-] = -J-
    const auto c3 = act(Generator::zero, act(Generator::minus, p)) - act(Generator::minus, act(Generator::zero, p)) +
                    act(Generator::minus, p);
    defect = std::max({defect, c1.max_abs_coeff(), c2.max_abs_coeff(), c3.max_abs_coeff()});
  }
  return defect;
}

OperatorCombination operator+(const OperatorCombination& x, const OperatorCombination& y) {
  return {x.c_pm + y.c_pm, x.c_0m + y.c_0m, x.c_p + y.c_p, x.c_m + y.c_m, x.c_0 + y.c_0, x.c_id + y.c_id};
}

OperatorCombination operator*(Complex s, const OperatorCombination& x) {
  return {s * x.c_pm, s * x.c_0m, s * x.c_p, s * x.c_m, s * x.c_0, s * x.c_id};
}

Polynomial apply_combination(const OperatorCombination& combo, const Polynomial& p, const SpinJ& rep) {
  const auto minus = apply_generator(Generator::minus, p, rep);
  Polynomial out;
  if (combo.c_pm != Complex{}) out = out + combo.c_pm * apply_generator(Generator::plus, minus, rep);
  if (combo.c_0m != Complex{}) out = out + combo.c_0m * apply_generator(Generator::zero, minus, rep);
  if (combo.c_p != Complex{}) out = out + combo.c_p * apply_generator(Generator::plus, p, rep);
  if (combo.c_m != Complex{}) out = out + combo.c_m * minus;
  if (combo.c_0 != Complex{}) out = out + combo.c_0 * apply_generator(Generator::zero, p, rep);
  if (combo.c_id != Complex{}) out = out + combo.c_id * p;
  return out;
}

BlockMatrix::BlockMatrix(std::size_t dim, std::vector<Complex> row_major) : dim_(dim), data_(std::move(row_major)) {
  if (data_.size() != dim * dim) throw ValidationError("BlockMatrix: entry count does not match dim*dim");
  for (const auto& c : data_) checked(c, "BlockMatrix entry");
}

BlockMatrix BlockMatrix::identity(std::size_t dim) {
  BlockMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

Complex BlockMatrix::trace() const {
  Complex t{};
  for (std::size_t i = 0; i < dim_; ++i) t += (*this)(i, i);
  return t;
}

double BlockMatrix::norm_inf() const {
  double best = 0.0;
  for (std::size_t r = 0; r < dim_; ++r) {
    double row = 0.0;
    for (std::size_t c = 0; c < dim_; ++c) row += std::abs((*this)(r, c));
    best = std::max(best, row);
  }
  return best;
}

BlockMatrix operator+(const BlockMatrix& x, const BlockMatrix& y) {
  if (x.dim() != y.dim()) throw ValidationError("BlockMatrix: dimension mismatch");
  BlockMatrix out(x.dim());
  for (std::size_t r = 0; r < x.dim(); ++r)
    for (std::size_t c = 0; c < x.dim(); ++c) out(r, c) = x(r, c) + y(r, c);
  return out;
}

BlockMatrix operator*(const BlockMatrix& x, const BlockMatrix& y) {
  if (x.dim() != y.dim()) throw ValidationError("BlockMatrix: dimension mismatch");
  const auto n = x.dim();
  BlockMatrix out(n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t k = 0; k < n; ++k) {
      const Complex xrk = x(r, k);
      for (std::size_t c = 0; c < n; ++c) out(r, c) += xrk * y(k, c);
    }
  return out;
}

BlockMatrix operator*(Complex s, const BlockMatrix& x) {
  BlockMatrix out(x.dim());
  for (std::size_t r = 0; r < x.dim(); ++r)
    for (std::size_t c = 0; c < x.dim(); ++c) out(r, c) = s * x(r, c);
  return out;
}

BlockMatrix matrix_on_module(const std::function<Polynomial(const Polynomial&)>& op, std::size_t dim) {
  BlockMatrix m(dim);
  for (std::size_t k = 0; k < dim; ++k) {
    const auto image = op(Polynomial::monomial(k));
    const double scale = image.max_abs_coeff();
    for (std::size_t r = dim; r < image.size(); ++r) {
      if (std::abs(image[r]) > 1e-12 * scale) {
        throw InvarianceViolation("operator maps z^" + std::to_string(k) + " outside degree " +
                                  std::to_string(dim - 1) + " (coefficient of z^" + std::to_string(r) + ")");
      }
    }
    for (std::size_t r = 0; r < dim; ++r) m(r, k) = image[r];
  }
  return m;
}

BlockMatrix build_block(const OperatorCombination& combo, const SpinJ& rep) {
  return matrix_on_module([&](const Polynomial& p) { return apply_combination(combo, p, rep); }, rep.dim());
}

}  // namespace qes
