#include "qes/tridiagonal.hpp"

#include <cmath>
#include <string>

#include "qes/error.hpp"

namespace qes {

TridiagonalLu::TridiagonalLu(std::span<const Complex> sub, std::span<const Complex> diag,
                             std::span<const Complex> super)
    : dl_(sub.begin(), sub.end()), d_(diag.begin(), diag.end()), du_(super.begin(), super.end()) {
  const auto n = d_.size();
  if (n == 0 || dl_.size() + 1 != n || du_.size() + 1 != n) {
    throw ValidationError("TridiagonalLu: inconsistent band sizes");
  }
  du2_.assign(n > 2 ? n - 2 : 0, Complex{});
  ipiv_.resize(n);
  for (std::size_t i = 0; i < n; ++i) ipiv_[i] = i;

  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (std::abs(d_[i]) >= std::abs(dl_[i])) {
      if (d_[i] != Complex{}) {
        const Complex fact = dl_[i] / d_[i];
        dl_[i] = fact;
        d_[i + 1] -= fact * du_[i];
      }
    } else {
      const Complex fact = d_[i] / dl_[i];
      d_[i] = dl_[i];
      dl_[i] = fact;
      const Complex temp = du_[i];
      du_[i] = d_[i + 1];
      d_[i + 1] = temp - fact * d_[i + 1];
      if (i + 2 < n) {
        du2_[i] = du_[i + 1];
        du_[i + 1] = -fact * du_[i + 1];
      }
      ipiv_[i] = i + 1;
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (d_[i] == Complex{} || !std::isfinite(std::abs(d_[i]))) {
      throw NumericOverflow("TridiagonalLu: zero or non-finite pivot at row " + std::to_string(i));
    }
  }
}

void TridiagonalLu::solve(std::span<Complex> b) const {
  const auto n = d_.size();
  if (b.size() != n) throw ValidationError("TridiagonalLu::solve: size mismatch");
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const auto ip = ipiv_[i];
    const Complex temp = b[i + 1 - ip + i] - dl_[i] * b[ip];
    b[i] = b[ip];
    b[i + 1] = temp;
  }
  b[n - 1] /= d_[n - 1];
  if (n > 1) b[n - 2] = (b[n - 2] - du_[n - 2] * b[n - 1]) / d_[n - 2];
  if (n > 2) {
    for (std::size_t i = n - 2; i-- > 0;) b[i] = (b[i] - du_[i] * b[i + 1] - du2_[i] * b[i + 2]) / d_[i];
  }
}

}  // namespace qes
