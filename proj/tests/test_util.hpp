#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <random>

#include "qes/cpoly.hpp"
#include "qes/sl2.hpp"

namespace qes::testing {

using Rng = std::mt19937_64;

inline Complex random_in_disk(Rng& rng, double radius = 1.0) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (;;) {
    const Complex c{u(rng), u(rng)};
    if (std::abs(c) <= 1.0) return radius * c;
  }
}

inline Polynomial random_poly(Rng& rng, int max_degree) {
  std::uniform_int_distribution<int> deg(0, max_degree);
  std::vector<Complex> c(static_cast<std::size_t>(deg(rng)) + 1);
  for (auto& x : c) x = random_in_disk(rng);
  return Polynomial(std::move(c));
}

inline BlockMatrix random_matrix(Rng& rng, std::size_t dim) {
  BlockMatrix m(dim);
  for (std::size_t r = 0; r < dim; ++r)
    for (std::size_t c = 0; c < dim; ++c) m(r, c) = random_in_disk(rng);
  return m;
}

/// max_k |p_k - q_k| / max(max|p|, max|q|, tiny).
inline double rel_coeff_error(const Polynomial& p, const Polynomial& q) {
  const auto n = std::max(p.size(), q.size());
  double err = 0.0;
  for (std::size_t k = 0; k < n; ++k) err = std::max(err, std::abs(p[k] - q[k]));
  const double scale = std::max({p.max_abs_coeff(), q.max_abs_coeff(), 1e-300});
  return err / scale;
}

inline double rel_matrix_error(const BlockMatrix& a, const BlockMatrix& b) {
  double err = 0.0, scale = 1e-300;
  for (std::size_t r = 0; r < a.dim(); ++r)
    for (std::size_t c = 0; c < a.dim(); ++c) {
      err = std::max(err, std::abs(a(r, c) - b(r, c)));
      scale = std::max({scale, std::abs(a(r, c)), std::abs(b(r, c))});
    }
  return err / scale;
}

}  // namespace qes::testing
