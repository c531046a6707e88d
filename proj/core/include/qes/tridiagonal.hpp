#pragma once

#include <span>
#include <vector>

#include "qes/cpoly.hpp"

namespace qes {

/// LU factorization of a complex tridiagonal matrix with partial (row)
/// pivoting, in the layout of LAPACK's ?gttrf: row swaps add a second
/// superdiagonal to U.
class TridiagonalLu {
 public:
  /// sub[i] = A(i+1, i), diag[i] = A(i, i), super[i] = A(i, i+1).
  /// Throws NumericOverflow if a pivot is exactly zero or non-finite.
  TridiagonalLu(std::span<const Complex> sub, std::span<const Complex> diag, std::span<const Complex> super);

  std::size_t size() const noexcept { return d_.size(); }

  /// Solves A x = rhs in place.
  void solve(std::span<Complex> rhs) const;

 private:
  std::vector<Complex> dl_, d_, du_, du2_;
  std::vector<std::size_t> ipiv_;
};

}  // namespace qes
