#include "published_forms.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace qes::cli {

namespace {

constexpr Complex I{0.0, 1.0};

PublishedForm compare(std::string quantity, std::string published, Complex published_value,
                      std::optional<Complex> computed, std::string mismatch_note, std::string match_note = {}) {
  PublishedForm f;
  f.quantity = std::move(quantity);
  f.published = std::move(published);
  f.published_value = published_value;
  f.computed_value = computed;
  f.agrees = computed && std::abs(*computed - published_value) <= 1e-9 * std::max(1.0, std::abs(published_value));
  f.note = f.agrees ? std::move(match_note) : std::move(mismatch_note);
  return f;
}

std::optional<Complex> shift_of(const QesSpectrum& s) { return s.common.shift; }

std::optional<Complex> ratio(const Polynomial& phi, std::size_t num, std::size_t den) {
  if (phi[den] == Complex{}) return std::nullopt;
  return phi[num] / phi[den];
}

std::vector<PublishedForm> sextic_forms(double mu, int two_j, const QesSpectrum& s) {
  std::vector<PublishedForm> out;
  if (two_j == 0) {
    out.push_back(compare("potential constant", "+i*mu", I * mu, shift_of(s),
                          "computed real-spectrum shift is -i*mu (base eigenvalue E = a = i*mu); the published sign is "
                          "adjudicated to -i*mu",
                          "agrees only because mu = 0"));
    out.push_back(compare("energy", "E = 0", 0.0, s.levels.at(0).energy_shifted, "shifted energy is not zero"));
    return out;
  }
  const Complex root = std::sqrt(Complex(2.0 - mu * mu));
  out.push_back(compare("potential constant", "-3i*mu", -3.0 * I * mu, shift_of(s),
                        "no common imaginary shift exists (outside mu^2 < 2) or the shift differs"));
  const auto& lo = s.levels.at(0);
  const auto& hi = s.levels.at(1);
  out.push_back(compare("energy (lower)", "E = -2*sqrt(2-mu^2)", -2.0 * root, lo.energy_shifted,
                        "outside mu^2 < 2 the pair leaves the real axis"));
  out.push_back(compare("energy (upper)", "E = +2*sqrt(2-mu^2)", 2.0 * root, hi.energy_shifted,
                        "outside mu^2 < 2 the pair leaves the real axis"));
  out.push_back(compare("phi z-coefficient (lower)", "+(sqrt(2-mu^2) - i*mu)", root - I * mu, ratio(lo.phi, 1, 0),
                        "computed null vector differs"));
  out.push_back(compare("phi z-coefficient (upper)", "-(sqrt(2-mu^2) - i*mu)", -(root - I * mu), ratio(hi.phi, 1, 0),
                        "computed null vector gives -(sqrt(2-mu^2) + i*mu); the published sign of i*mu is not "
                        "reproduced",
                        "agrees only because mu = 0"));
  return out;
}

std::vector<PublishedForm> morse_forms(double mu, const MorseParams& p, const QesSpectrum& s) {
  std::vector<PublishedForm> out;
  const Complex base = 2.0 * p.a * p.d - (9.0 - mu * mu) / 4.0;
  if (p.two_j == 0) {
    out.push_back(compare("potential constant", "-3i*mu/2", -1.5 * I * mu, shift_of(s), "computed shift differs"));
    out.push_back(compare("energy", "E = 2ac - (9-mu^2)/4, read with c = d", base, s.levels.at(0).energy_shifted,
                          "computed shifted energy differs"));
    return out;
  }
  const Complex root = std::sqrt(16.0 * p.a * p.d - mu * mu);
  const std::string no_shift =
      "the computed pair has no common imaginary part for b = (i*mu-3)/2, so no constant shift makes it real; the "
      "determinant roots are authoritative";
  const std::string energy_note =
      "computed eigenvalues are 2ad - b^2 + [-(2b+1) -/+ sqrt((2b+1)^2 + 16ad)]/2 (shifted by the reported shift); "
      "the published form is not reproduced";
  out.push_back(compare("potential constant", "-i*mu", -I * mu, shift_of(s), no_shift));
  const auto& lo = s.levels.at(0);
  const auto& hi = s.levels.at(1);
  out.push_back(compare("energy (first)", "E = 2ad - (9-mu^2)/4 - sqrt(16ad-mu^2)", base - root, lo.energy_shifted,
                        energy_note));
  out.push_back(compare("energy (second)", "E = 2ad - (9-mu^2)/4 + sqrt(16ad-mu^2)", base + root, hi.energy_shifted,
                        energy_note));
  out.push_back(compare("phi constant term over e^{-x} term (first)", "(-i*mu + sqrt(16ad-mu^2))/(4a)",
                        (-I * mu + root) / (4.0 * p.a), ratio(lo.phi, 0, 1), "computed null vector differs"));
  out.push_back(compare("phi constant term over e^{-x} term (second)", "(-i*mu - sqrt(16ad-mu^2))/(4a)",
                        (-I * mu - root) / (4.0 * p.a), ratio(hi.phi, 0, 1), "computed null vector differs"));
  return out;
}

}  // namespace

std::vector<PublishedForm> published_forms(const QesModel& model, const MuInput& input, const QesSpectrum& spectrum) {
  if (!input.mu) return {};
  const double mu = *input.mu;
  if (model.family == Family::sextic) {
    const auto& p = model.sextic();
    if (p.sector != Sector::even || p.two_j > 1) return {};
    return sextic_forms(mu, p.two_j, spectrum);
  }
  const auto& p = model.morse();
  if (input.b_real != -1.5 || p.two_j > 1) return {};
  return morse_forms(mu, p, spectrum);
}

}  // namespace qes::cli
