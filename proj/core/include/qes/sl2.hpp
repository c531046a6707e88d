#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "qes/cpoly.hpp"

namespace qes {

/// Spin-j representation label. Stores 2j so half-integer spins stay exact.
///
/// The module is spanned by {1, z, ..., z^{2j}}; basis index k corresponds
/// to magnetic number m = k - j.
class SpinJ {
 public:
  explicit SpinJ(int two_j);

  int two_j() const noexcept { return two_j_; }
  double j() const noexcept { return 0.5 * two_j_; }
  std::size_t dim() const noexcept { return static_cast<std::size_t>(two_j_) + 1; }

  friend bool operator==(const SpinJ&, const SpinJ&) = default;

 private:
  int two_j_;
};

enum class Generator { plus, zero, minus };

/// J+ = z^2 d/dz - 2j z,  J0 = z d/dz - j,  J- = d/dz.
Polynomial apply_generator(Generator g, const Polynomial& p, const SpinJ& rep);

/// Largest coefficient norm of ([J+,J-] + 2J0)p and ([J0,J±] ∓ J±)p over
/// the basis monomials of `rep`. Zero up to roundoff for a faithful
/// representation.
double commutator_defect(const SpinJ& rep);

/// Coefficients of a bilinear sl(2) expression
///   c_pm J+J- + c_0m J0J- + c_p J+ + c_m J- + c_0 J0 + c_id.
/// c_id holds only the energy-independent part of the identity term.
struct OperatorCombination {
  Complex c_pm{};
  Complex c_0m{};
  Complex c_p{};
  Complex c_m{};
  Complex c_0{};
  Complex c_id{};

  friend bool operator==(const OperatorCombination&, const OperatorCombination&) = default;
};

OperatorCombination operator+(const OperatorCombination& x, const OperatorCombination& y);
OperatorCombination operator*(Complex s, const OperatorCombination& x);

/// Applies the combination to `p` by composing generator actions.
Polynomial apply_combination(const OperatorCombination& combo, const Polynomial& p, const SpinJ& rep);

/// Dense square complex matrix, row-major.
class BlockMatrix {
 public:
  BlockMatrix() = default;
  explicit BlockMatrix(std::size_t dim) : dim_(dim), data_(dim * dim) {}
  BlockMatrix(std::size_t dim, std::vector<Complex> row_major);

  static BlockMatrix identity(std::size_t dim);

  std::size_t dim() const noexcept { return dim_; }
  Complex& operator()(std::size_t r, std::size_t c) { return data_[r * dim_ + c]; }
  Complex operator()(std::size_t r, std::size_t c) const { return data_[r * dim_ + c]; }

  Complex trace() const;
  /// Max absolute row sum.
  double norm_inf() const;

  friend bool operator==(const BlockMatrix&, const BlockMatrix&) = default;

 private:
  std::size_t dim_ = 0;
  std::vector<Complex> data_;
};

BlockMatrix operator+(const BlockMatrix& x, const BlockMatrix& y);
BlockMatrix operator*(const BlockMatrix& x, const BlockMatrix& y);
BlockMatrix operator*(Complex s, const BlockMatrix& x);

/// Matrix of a linear operator on {1, z, ..., z^{dim-1}}: column k holds
/// the coordinates of op(z^k). Throws InvarianceViolation if an image has a
/// coefficient beyond degree dim-1 larger than 1e-12 relative to the
/// largest coefficient of that image.
BlockMatrix matrix_on_module(const std::function<Polynomial(const Polynomial&)>& op, std::size_t dim);

/// Matrix of `combo` on the monomial basis of `rep`: column k holds the
/// coordinates of combo·z^k. Generators are applied by polynomial
/// arithmetic through matrix_on_module.
BlockMatrix build_block(const OperatorCombination& combo, const SpinJ& rep);

}  // namespace qes
