#include "qes/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "qes/error.hpp"

namespace qes {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

void check_dim(const BlockMatrix& m, const char* who) {
  if (m.dim() == 0 || m.dim() > kMaxBlockDim) {
    throw ValidationError(std::string(who) + ": block dimension " + std::to_string(m.dim()) + " outside [1, " +
                          std::to_string(kMaxBlockDim) + "]");
  }
}

bool lex_less(Complex x, Complex y) {
  if (x.real() != y.real()) return x.real() < y.real();
  return x.imag() < y.imag();
}

struct HornerResult {
  Complex value;
  Complex derivative;
  double error_bound;
};

// p, p' and a running bound on the rounding error of p (Higham, eq. 5.7 style).
HornerResult horner(std::span<const Complex> c, Complex z) {
  Complex p = c.back();
  Complex dp{};
  double bound = std::abs(p);
  const double az = std::abs(z);
  for (std::size_t k = c.size() - 1; k-- > 0;) {
    dp = dp * z + p;
    p = p * z + c[k];
    bound = bound * az + std::abs(p);
  }
  return {p, dp, 4.0 * static_cast<double>(c.size()) * kEps * bound};
}

}  // namespace

Polynomial char_poly(const BlockMatrix& m) {
  check_dim(m, "char_poly");
  const auto n = m.dim();
  std::vector<Complex> c(n + 1);
  c[n] = 1.0;
  BlockMatrix mk(n);  // M_0 = 0
  for (std::size_t k = 1; k <= n; ++k) {
    mk = m * mk;
    for (std::size_t i = 0; i < n; ++i) mk(i, i) += c[n - k + 1];
    c[n - k] = checked(-(m * mk).trace() / static_cast<double>(k), "char_poly");
  }
  return Polynomial(std::move(c));
}

std::vector<Complex> poly_roots(const Polynomial& p, const RootOptions& opts) {
  const auto deg = p.degree();
  if (!deg || *deg < 1) throw ValidationError("poly_roots: polynomial must have degree >= 1");
  const std::size_t n = *deg;

  std::vector<Complex> c(p.coeffs().begin(), p.coeffs().end());
  const Complex lead = c.back();
  for (auto& x : c) x /= lead;

  if (n == 1) return {checked(-c[0], "poly_roots")};

  double radius = 0.0;
  for (std::size_t k = 0; k < n; ++k) radius = std::max(radius, std::abs(c[k]));
  radius += 1.0;

  std::vector<Complex> z(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n) + 0.4;
    z[k] = std::polar(radius, angle);
  }

  std::vector<bool> done(n, false);
  for (int iter = 0; iter < opts.max_iterations; ++iter) {
    bool all_done = true;
    for (std::size_t k = 0; k < n; ++k) {
      if (done[k]) continue;
      const auto h = horner(c, z[k]);
      if (std::abs(h.value) <= h.error_bound) {
        done[k] = true;
        continue;
      }
      all_done = false;
      if (h.derivative == Complex{}) {
        z[k] += std::polar(1e-8 * std::max(1.0, std::abs(z[k])), 0.7 * static_cast<double>(iter + 1));
        continue;
      }
      const Complex ratio = h.value / h.derivative;
      Complex sum{};
      for (std::size_t j = 0; j < n; ++j) {
        if (j == k) continue;
        const Complex diff = z[k] - z[j];
        if (diff != Complex{}) sum += 1.0 / diff;
      }
      const Complex w = ratio / (1.0 - ratio * sum);
      z[k] -= w;
      checked(z[k], "poly_roots");
      if (std::abs(w) < opts.tol * std::max(1.0, std::abs(z[k]))) done[k] = true;
    }
    if (all_done) {
      std::sort(z.begin(), z.end(), lex_less);
      return z;
    }
  }

  double defect = 0.0;
  for (const auto& x : z) defect = std::max(defect, std::abs(horner(c, x).value));
  throw ConvergenceFailure("poly_roots: no convergence after " + std::to_string(opts.max_iterations) + " iterations",
                           z, defect);
}

std::vector<Complex> null_vector(const BlockMatrix& m, Complex lambda) {
  const auto n = m.dim();
  if (n == 0) return {};
  std::vector<Complex> a(n * n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) a[r * n + c] = m(r, c) - (r == c ? lambda : Complex{});
  auto at = [&](std::size_t r, std::size_t c) -> Complex& { return a[r * n + c]; };

  std::vector<std::size_t> col(n);
  for (std::size_t i = 0; i < n; ++i) col[i] = i;

  // Eliminate n-1 columns; the last (smallest) pivot is dropped.
  std::size_t rank = n - 1;
  for (std::size_t s = 0; s + 1 < n; ++s) {
    std::size_t pr = s, pc = s;
    double best = -1.0;
    for (std::size_t r = s; r < n; ++r)
      for (std::size_t c = s; c < n; ++c)
        if (std::abs(at(r, c)) > best) {
          best = std::abs(at(r, c));
          pr = r;
          pc = c;
        }
    if (best == 0.0) {
      rank = s;
      break;
    }
    if (pr != s)
      for (std::size_t c = 0; c < n; ++c) std::swap(at(pr, c), at(s, c));
    if (pc != s) {
      for (std::size_t r = 0; r < n; ++r) std::swap(at(r, pc), at(r, s));
      std::swap(col[pc], col[s]);
    }
    for (std::size_t r = s + 1; r < n; ++r) {
      const Complex f = at(r, s) / at(s, s);
      if (f == Complex{}) continue;
      at(r, s) = 0.0;
      for (std::size_t c = s + 1; c < n; ++c) at(r, c) -= f * at(s, c);
    }
  }

  std::vector<Complex> y(n);
  y[n - 1] = 1.0;
  for (std::size_t s = rank; s-- > 0;) {
    Complex acc{};
    for (std::size_t c = s + 1; c < n; ++c) acc += at(s, c) * y[c];
    y[s] = -acc / at(s, s);
  }
  std::vector<Complex> x(n);
  for (std::size_t i = 0; i < n; ++i) x[col[i]] = y[i];
  return x;
}

std::vector<EigenPair> eigen_solve(const BlockMatrix& m, const RootOptions& opts) {
  check_dim(m, "eigen_solve");
  const auto roots = poly_roots(char_poly(m), opts);
  const auto n = roots.size();

  // Single-linkage clustering of nearby roots.
  std::vector<std::size_t> label(n);
  for (std::size_t i = 0; i < n; ++i) label[i] = i;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = i + 1; k < n; ++k) {
      const double scale = std::max({1.0, std::abs(roots[i]), std::abs(roots[k])});
      if (std::abs(roots[i] - roots[k]) <= kClusterTolerance * scale) {
        const auto from = label[k], to = label[i];
        for (auto& l : label)
          if (l == from) l = to;
      }
    }

  const double mnorm = m.norm_inf();
  std::vector<EigenPair> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    Complex mean{};
    int count = 0;
    for (std::size_t k = 0; k < n; ++k)
      if (label[k] == label[i]) {
        mean += roots[k];
        ++count;
      }
    mean /= static_cast<double>(count);

    // Reuse the vector already computed for this cluster.
    const auto prev = std::find_if(out.begin(), out.end(), [&](const EigenPair& e) {
      return e.multiplicity == count && e.value == mean;
    });
    if (prev != out.end()) {
      out.push_back(*prev);
      continue;
    }

    auto v = null_vector(m, mean);
    double vmax = 0.0;
    for (const auto& x : v) vmax = std::max(vmax, std::abs(x));
    const auto first = std::find_if(v.begin(), v.end(), [&](Complex x) { return std::abs(x) > 1e-13 * vmax; });
    const Complex pivot = *first;
    for (auto& x : v) x /= pivot;

    double rnorm = 0.0, vnorm = 0.0;
    for (std::size_t r = 0; r < v.size(); ++r) {
      Complex acc = -mean * v[r];
      for (std::size_t c = 0; c < v.size(); ++c) acc += m(r, c) * v[c];
      rnorm = std::max(rnorm, std::abs(acc));
      vnorm = std::max(vnorm, std::abs(v[r]));
    }
    const double denom = (mnorm > 0.0 ? mnorm : 1.0) * vnorm;
    out.push_back({mean, Polynomial(std::move(v)), count, rnorm / denom});
  }
  std::stable_sort(out.begin(), out.end(), [](const EigenPair& x, const EigenPair& y) { return lex_less(x.value, y.value); });
  return out;
}

CommonShift common_imaginary_shift(std::span<const Complex> eigs, double tol) {
  if (eigs.empty()) throw ValidationError("common_imaginary_shift: empty eigenvalue list");
  std::vector<double> im;
  im.reserve(eigs.size());
  for (const auto& e : eigs) im.push_back(e.imag());
  std::sort(im.begin(), im.end());
  const auto n = im.size();
  const double median = n % 2 == 1 ? im[n / 2] : 0.5 * (im[n / 2 - 1] + im[n / 2]);
  double spread = 0.0;
  for (double v : im) spread = std::max(spread, std::abs(v - median));

  CommonShift out;
  out.spread = spread;
  if (spread <= tol) out.shift = Complex{0.0, 0.0 - median};
  return out;
}

QesSpectrum solve_model(const QesModel& model, const RootOptions& opts) {
  const auto block = build_block(model.combo, model.rep);
  const auto pairs = eigen_solve(block, opts);

  std::vector<Complex> values;
  values.reserve(pairs.size());
  for (const auto& p : pairs) values.push_back(p.value);

  QesSpectrum out;
  out.common = common_imaginary_shift(values);
  const Complex shift = out.common.shift.value_or(Complex{});
  for (const auto& p : pairs) {
    out.levels.push_back({p.value, p.value + shift, shift, p.vector, p.residual, p.multiplicity});
  }
  return out;
}

}  // namespace qes
