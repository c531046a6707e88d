#include "qes/families.hpp"

#include <cmath>
#include <string>

#include "qes/error.hpp"

namespace qes {

namespace {

constexpr Complex kI{0.0, 1.0};

Complex exp_checked(double x) {
  const double v = std::exp(x);
  if (!std::isfinite(v)) throw NumericOverflow("exponential overflow at x = " + std::to_string(x));
  return v;
}

}  // namespace

std::string_view to_string(Family f) { return f == Family::sextic ? "sextic" : "morse"; }
std::string_view to_string(Sector s) { return s == Sector::even ? "even" : "odd"; }

SexticParams SexticParams::from_mu(double mu, int two_j, Sector sector) {
  return {kI * mu, two_j, sector};
}

Complex SexticParams::beta() const {
  return a * a - 4.0 * two_j - (sector == Sector::even ? 3.0 : 5.0);
}

MorseParams MorseParams::from_mu(Complex a, Complex d, double mu, int two_j, double b_real) {
  return {a, d, Complex{b_real, 0.5 * mu}, two_j};
}

Complex MorseParams::gamma() const { return -(2.0 * a * b + (2.0 * two_j + 1.0) * a); }

Complex GaugeSpec::w(double x) const {
  if (const auto* s = std::get_if<SexticParams>(&params_)) {
    Complex w = x * x * x + s->a * x;
    if (s->sector == Sector::odd) w -= 1.0 / x;
    return w;
  }
  const auto& m = std::get<MorseParams>(params_);
  return m.d * exp_checked(x) - m.a * exp_checked(-x) + m.b;
}

Complex GaugeSpec::dw(double x) const {
  if (const auto* s = std::get_if<SexticParams>(&params_)) {
    Complex dw = 3.0 * x * x + s->a;
    if (s->sector == Sector::odd) dw += 1.0 / (x * x);
    return dw;
  }
  const auto& m = std::get<MorseParams>(params_);
  return m.d * exp_checked(x) + m.a * exp_checked(-x);
}

Complex GaugeSpec::antiderivative(double x) const {
  if (const auto* s = std::get_if<SexticParams>(&params_)) {
    const double x2 = x * x;
    Complex g = 0.25 * x2 * x2 + 0.5 * s->a * x2;
    if (s->sector == Sector::odd) g -= std::log(std::abs(x));
    return g;
  }
  const auto& m = std::get<MorseParams>(params_);
  return m.d * exp_checked(x) + m.a * exp_checked(-x) + m.b * x;
}

QesModel make_sextic(const SexticParams& params) {
  const SpinJ rep(params.two_j);
  const Complex a = params.a;
  const double j = rep.j();
  const bool even = params.sector == Sector::even;

  QesModel model;
  model.family = Family::sextic;
  model.params = params;
  model.rep = rep;
  model.combo.c_0m = -4.0;
  model.combo.c_p = 4.0;
  model.combo.c_m = even ? -(2.0 + 4.0 * j) : -(6.0 + 4.0 * j);
  model.combo.c_0 = 4.0 * a;
  model.combo.c_id = 4.0 * a * j + (even ? a : 3.0 * a);
  model.ode.p2 = Polynomial{0.0, -4.0};
  model.ode.p1 = Polynomial{even ? -2.0 : -6.0, 4.0 * a, 4.0};
  model.ode.p0 = Polynomial{even ? a : 3.0 * a, -8.0 * j};
  model.gauge = GaugeSpec(params);
  model.change_of_variable = ChangeOfVariable::square;
  return model;
}

QesModel make_morse(const MorseParams& params) {
  if (params.a == Complex{}) throw ValidationError("Morse parameter a must be nonzero");
  if (params.d == Complex{}) throw ValidationError("Morse parameter d must be nonzero");
  const SpinJ rep(params.two_j);
  const auto [a, d, b, two_j] = params;
  const double j = rep.j();

  QesModel model;
  model.family = Family::morse;
  model.params = params;
  model.rep = rep;
  model.combo.c_pm = -1.0;
  model.combo.c_p = 2.0 * a;
  model.combo.c_m = -2.0 * d;
  model.combo.c_0 = -(2.0 * b + 1.0 + 2.0 * j);
  model.combo.c_id = model.combo.c_0 * j + 2.0 * a * d - b * b;
  model.ode.p2 = Polynomial{0.0, 0.0, -1.0};
  model.ode.p1 = Polynomial{-2.0 * d, -(2.0 * b + 1.0), 2.0 * a};
  model.ode.p0 = Polynomial{2.0 * a * d - b * b, -4.0 * j * a};
  model.gauge = GaugeSpec(params);
  model.change_of_variable = ChangeOfVariable::exp_neg;
  return model;
}

Complex change_variable(const QesModel& model, double x) {
  return model.change_of_variable == ChangeOfVariable::square ? Complex{x * x} : exp_checked(-x);
}

PotentialCoefficients potential_coefficients(const QesModel& model) {
  if (model.family == Family::sextic) {
    const auto& s = model.sextic();
    return {1.0, 2.0 * s.a, s.beta(), 0.0};
  }
  const auto& m = model.morse();
  return {m.d * m.d, -m.d * (1.0 - 2.0 * m.b), m.gamma(), m.a * m.a};
}

Complex potential_eval(const QesModel& model, double x, Complex shift) {
  const auto c = potential_coefficients(model);
  if (model.family == Family::sextic) {
    const double x2 = x * x;
    return checked(((c[0] * x2 + c[1]) * x2 + c[2]) * x2 + c[3] + shift, "potential_eval");
  }
  const Complex ex = exp_checked(x);
  const Complex emx = exp_checked(-x);
  return checked(c[0] * ex * ex + c[1] * ex + c[2] * emx + c[3] * emx * emx + shift, "potential_eval");
}

TridiagonalAction closed_form_block_action(const QesModel& model, int k) {
  const int two_j = model.rep.two_j();
  if (k < 0 || k > two_j) {
    throw ValidationError("closed_form_block_action: k = " + std::to_string(k) + " outside [0, " +
                          std::to_string(two_j) + "]");
  }
  const double kd = k;
  if (model.family == Family::sextic) {
    const auto& s = model.sextic();
    if (s.sector == Sector::even) {
      return {-2.0 * kd * (2.0 * kd - 1.0), s.a * (4.0 * kd + 1.0), 4.0 * (kd - two_j)};
    }
    return {-2.0 * kd * (2.0 * kd + 1.0), s.a * (4.0 * kd + 3.0), 4.0 * (kd - two_j)};
  }
  const auto& m = model.morse();
  return {-2.0 * m.d * kd,
          -kd * (kd - 1.0) - (2.0 * m.b + 1.0) * kd + 2.0 * m.a * m.d - m.b * m.b,
          2.0 * m.a * (kd - two_j)};
}

BlockMatrix closed_form_block(const QesModel& model) {
  const auto n = model.rep.dim();
  BlockMatrix m(n);
  for (std::size_t k = 0; k < n; ++k) {
    const auto t = closed_form_block_action(model, static_cast<int>(k));
    if (k > 0) m(k - 1, k) = t.lower;
    m(k, k) = t.diag;
    if (k + 1 < n) m(k + 1, k) = t.upper;
  }
  return m;
}

}  // namespace qes
