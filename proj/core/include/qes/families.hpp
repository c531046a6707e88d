#pragma once

#include <array>
#include <string_view>
#include <variant>

#include "qes/cpoly.hpp"
#include "qes/sl2.hpp"

namespace qes {

enum class Family { sextic, morse };
enum class Sector { even, odd };
enum class ChangeOfVariable { square, exp_neg };  // z = x^2, z = e^{-x}

std::string_view to_string(Family f);
std::string_view to_string(Sector s);

/// Sextic oscillator V = x^6 + 2a x^4 + beta x^2 with gauge W = x^3 + a x
/// (even) or W = x^3 + a x - 1/x (odd).
struct SexticParams {
  Complex a{};
  int two_j = 0;
  Sector sector = Sector::even;

  /// a = i*mu.
  static SexticParams from_mu(double mu, int two_j, Sector sector = Sector::even);

  /// Coefficient of x^2: a^2 - 8j - 3 (even) or a^2 - 8j - 5 (odd).
  Complex beta() const;
};

/// Morse-type potential with gauge W = d e^x - a e^{-x} + b.
struct MorseParams {
  Complex a{1.0};
  Complex d{1.0};
  Complex b{};
  int two_j = 0;

  /// b = b_real + i*mu/2; the default b_real = -3/2 gives b = (i mu - 3)/2.
  static MorseParams from_mu(Complex a, Complex d, double mu, int two_j, double b_real = -1.5);

  /// Coefficient of e^{-x}, always derived: -[2ab + (4j+1)a].
  Complex gamma() const;
};

/// Superpotential W, its derivative, and its antiderivative G with G' = W.
class GaugeSpec {
 public:
  GaugeSpec() = default;
  explicit GaugeSpec(SexticParams p) : params_(p) {}
  explicit GaugeSpec(MorseParams p) : params_(p) {}

  Complex w(double x) const;
  Complex dw(double x) const;
  /// Sextic odd: G = x^4/4 + a x^2/2 - ln|x|, so G(0) = +inf.
  Complex antiderivative(double x) const;

 private:
  std::variant<SexticParams, MorseParams> params_;
};

/// z-space equation  p2 phi'' + p1 phi' + (p0 - E) phi = 0.
struct ZOde {
  Polynomial p2, p1, p0;
};

/// Coefficients of a potential in the family's natural basis:
/// sextic (x^6, x^4, x^2, 1), Morse (e^{2x}, e^x, e^{-x}, e^{-2x}).
using PotentialCoefficients = std::array<Complex, 4>;

struct QesModel {
  Family family = Family::sextic;
  std::variant<SexticParams, MorseParams> params;
  SpinJ rep{0};
  OperatorCombination combo;
  ZOde ode;
  GaugeSpec gauge;
  ChangeOfVariable change_of_variable = ChangeOfVariable::square;

  const SexticParams& sextic() const { return std::get<SexticParams>(params); }
  const MorseParams& morse() const { return std::get<MorseParams>(params); }
  bool is_odd_sextic() const {
    return family == Family::sextic && sextic().sector == Sector::odd;
  }
};

QesModel make_sextic(const SexticParams& params);
QesModel make_morse(const MorseParams& params);

/// z as a function of x for the model's change of variable.
Complex change_variable(const QesModel& model, double x);

PotentialCoefficients potential_coefficients(const QesModel& model);

/// V(x) + shift. The canonical potential carries no constant term.
Complex potential_eval(const QesModel& model, double x, Complex shift = {});

/// Coefficients of z^{k-1}, z^k, z^{k+1} in the image of z^k under the
/// gauged Hamiltonian, in closed form. Independent of build_block.
struct TridiagonalAction {
  Complex lower, diag, upper;
};
TridiagonalAction closed_form_block_action(const QesModel& model, int k);

/// Tridiagonal block assembled from closed_form_block_action.
BlockMatrix closed_form_block(const QesModel& model);

}  // namespace qes
