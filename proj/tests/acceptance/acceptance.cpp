// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "qes/analysis.hpp"
#include "qes/error.hpp"

using namespace qes;

namespace {

constexpr Complex I{0.0, 1.0};

// Independent quadrature oracle: ∫ e^{-x^4/2} dx = 2^{-3/4} Γ(1/4).
constexpr double kSexticJ0Norm = 2.1558005495409279;

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail += (detail.empty() ? "" : "; ") + what;
    }
  }
};

int failures = 0;

void report(int id, const char* title, const std::function<Outcome()>& body) {
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o.pass = false;
    o.detail = std::string("exception: ") + e.what();
  }
  if (!o.pass) ++failures;
  fmt::print("{} [{:2}] {}{}{}\n", o.pass ? "PASS" : "FAIL", id, title, o.detail.empty() ? "" : " | ", o.detail);
}

std::string c(Complex z) { return fmt::format("{:.6g}{:+.6g}i", z.real(), z.imag()); }

Complex draw(std::mt19937_64& rng, double radius, double min_abs = 0.0) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (;;) {
    const Complex z{u(rng), u(rng)};
    if (std::abs(z) <= 1.0 && radius * std::abs(z) >= min_abs) return radius * z;
  }
}

QesSpectrum solve(const QesModel& m) { return solve_model(m); }

double simpson_norm(const Wavefunction& w, double lo, double hi, double h) {
  const auto n = static_cast<int>(std::ceil((hi - lo) / h / 2.0)) * 2;
  const double step = (hi - lo) / n;
  double sum = 0.0;
  for (int i = 0; i <= n; ++i) {
    const double weight = (i == 0 || i == n) ? 1.0 : (i % 2 ? 4.0 : 2.0);
    sum += weight * std::norm(psi_eval(w, lo + i * step));
  }
  return sum * step / 3.0;
}

std::vector<std::vector<std::string>> scan_rows(const cli::ModelOptions& opts, const std::vector<double>& mus) {
  std::ostringstream out;
  cli::write_scan_csv(opts, mus, out);
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(out.str());
  std::string line;
  std::getline(in, line);  // header
  while (std::getline(in, line)) {
    std::vector<std::string> cells;
    std::istringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    rows.push_back(cells);
  }
  return rows;
}

}  // namespace

int main() {
  fmt::print("qes acceptance suite\n");

  report(1, "Sextic j=1/2 fixture: shifted spectrum +-2 sqrt(2-mu^2), shift -3i mu (1e-10)", [] {
    Outcome o;
    for (double mu : {0.0, 0.5, 1.0, 1.2}) {
      const auto s = solve(make_sextic(SexticParams::from_mu(mu, 1)));
      const double r = 2.0 * std::sqrt(2.0 - mu * mu);
      o.require(s.levels.size() == 2 && s.common.found(), fmt::format("mu={}: no common shift", mu));
      if (!o.pass) return o;
      const double err = std::max(std::abs(s.levels[0].energy_shifted + r), std::abs(s.levels[1].energy_shifted - r));
      const double shift_err = std::abs(*s.common.shift + 3.0 * I * mu);
      o.require(err <= 1e-10, fmt::format("mu={}: energy error {:.2e}", mu, err));
      o.require(shift_err <= 1e-10, fmt::format("mu={}: shift error {:.2e}", mu, shift_err));
      if (mu == 1.0)
        o.detail += fmt::format("mu=1 levels {} {}", c(s.levels[0].energy_shifted), c(s.levels[1].energy_shifted));
    }
    return o;
  });

  report(2, "Sextic j=0 fixture: base E = i mu (1e-12), shifted E = 0, published +i mu flagged", [] {
    Outcome o;
    for (double mu : {0.0, 0.5, 1.0, 1.2}) {
      const auto s = solve(make_sextic(SexticParams::from_mu(mu, 0)));
      const auto& l = s.levels.at(0);
      o.require(std::abs(l.energy_base - I * mu) <= 1e-12, fmt::format("mu={}: base {}", mu, c(l.energy_base)));
      o.require(std::abs(l.energy_shifted) <= 1e-12, fmt::format("mu={}: shifted {}", mu, c(l.energy_shifted)));
    }
    const auto rep = cli::solve_report(cli::resolve_model({.family = "sextic", .two_j = 0, .mu = 1.0}));
    const auto it = std::find_if(rep.published_forms.begin(), rep.published_forms.end(),
                                 [](const auto& f) { return f.quantity == "potential constant"; });
    o.require(it != rep.published_forms.end(), "no published constant comparison");
    if (it != rep.published_forms.end()) {
      o.require(!it->agrees && it->computed_value && std::abs(*it->computed_value + I) <= 1e-12,
                "constant not flagged as -i mu");
      o.detail += fmt::format("published {} vs computed {}: flagged", it->published, c(*it->computed_value));
    }
    return o;
  });

  report(3, "Morse j=0 fixture a=d=mu=1: shift -1.5i, shifted E = 2ad-(9-mu^2)/4 = 0 (1e-10)", [] {
    Outcome o;
    const auto s = solve(make_morse(MorseParams::from_mu(1.0, 1.0, 1.0, 0)));
    o.require(s.common.found() && std::abs(*s.common.shift + 1.5 * I) <= 1e-10, "shift");
    o.require(std::abs(s.levels.at(0).energy_shifted) <= 1e-10, "energy " + c(s.levels.at(0).energy_shifted));
    o.detail += fmt::format("shifted E {}", c(s.levels.at(0).energy_shifted));
    return o;
  });

  report(4, "Morse j=1/2 adjudication: oracle residual <= 1e-10, published forms emitted", [] {
    Outcome o;
    const auto rep = cli::solve_report(cli::resolve_model({.family = "morse", .two_j = 1, .mu = 1.0}));
    for (const auto& l : rep.levels) o.require(l.residual_sup <= 1e-10, fmt::format("residual {:.2e}", l.residual_sup));
    o.require(rep.levels.size() == 2, "expected two levels");
    int energies = 0;
    for (const auto& f : rep.published_forms) {
      if (f.quantity.rfind("energy", 0) == 0) ++energies;
      o.detail += fmt::format("{}{}: {}", o.detail.empty() ? "" : "; ", f.quantity, f.agrees ? "agrees" : "disagrees");
    }
    o.require(energies == 2, "energy comparisons missing");
    o.detail += fmt::format("; common shift {}", rep.common_shift_found ? "found" : "absent");
    return o;
  });

  report(5, "Residual suite: both families, two_j 0..4, 5 draws each, residual_sup <= 1e-10", [] {
    Outcome o;
    std::mt19937_64 rng(20240611);
    double worst = 0.0;
    int pairs = 0;
    for (int two_j = 0; two_j <= 4; ++two_j) {
      for (int k = 0; k < 5; ++k) {
        const auto sector = k % 2 ? Sector::odd : Sector::even;
        const std::vector<QesModel> models{
            make_sextic({draw(rng, 2.0), two_j, sector}),
            make_morse({draw(rng, 2.0, 0.2), draw(rng, 2.0, 0.2), draw(rng, 2.0), two_j})};
        for (const auto& m : models) {
          const auto xs = default_residual_sample(m.family);
          for (const auto& s : solve(m).levels) {
            worst = std::max(worst, residual_sup({m, s}, xs));
            ++pairs;
          }
        }
      }
    }
    o.require(worst <= 1e-10, fmt::format("worst {:.2e}", worst));
    o.detail += fmt::format("{} eigenpairs, worst {:.2e}", pairs, worst);
    return o;
  });

  report(6, "Oracle equivalence: generic block == closed-form tridiagonal block (1e-12), two_j <= 12", [] {
    Outcome o;
    std::mt19937_64 rng(20240612);
    double worst = 0.0;
    for (int two_j = 0; two_j <= 12; ++two_j) {
      for (int k = 0; k < 10; ++k) {
        const std::vector<QesModel> models{
            make_sextic({draw(rng, 2.0), two_j, k % 2 ? Sector::odd : Sector::even}),
            make_morse({draw(rng, 2.0, 0.2), draw(rng, 2.0, 0.2), draw(rng, 2.0), two_j})};
        for (const auto& m : models) {
          const auto generic = build_block(m.combo, m.rep);
          const auto closed = closed_form_block(m);
          for (std::size_t r = 0; r < generic.dim(); ++r)
            for (std::size_t col = 0; col < generic.dim(); ++col)
              worst = std::max(worst, std::abs(generic(r, col) - closed(r, col)) / std::max(1.0, std::abs(closed(r, col))));
        }
      }
    }
    o.require(worst <= 1e-12, fmt::format("worst entry error {:.2e}", worst));
    o.detail += fmt::format("worst relative entry error {:.2e}", worst);
    return o;
  });

  report(7, "Algebra suite: commutator_defect <= 1e-13 for two_j <= 20, top state annihilated exactly", [] {
    Outcome o;
    double worst = 0.0;
    for (int two_j = 0; two_j <= 20; ++two_j) {
      const SpinJ rep(two_j);
      worst = std::max(worst, commutator_defect(rep));
      const auto top = apply_generator(Generator::plus, Polynomial::monomial(static_cast<std::size_t>(two_j)), rep);
      o.require(top == Polynomial{}, fmt::format("J+ z^{} != 0", two_j));
      o.require(apply_generator(Generator::minus, Polynomial{1.0}, rep) == Polynomial{}, "J- 1 != 0");
    }
    o.require(worst <= 1e-13, fmt::format("defect {:.2e}", worst));
    o.detail += fmt::format("worst defect {:.2e}", worst);
    return o;
  });

  report(8, "Grid cross-check, fixtures 1-3: defect <= 5e-3 at n=2000, Richardson ratio in [3.2, 4.8]", [] {
    Outcome o;
    const std::vector<std::pair<std::string, QesModel>> fixtures{
        {"sextic j=1/2", make_sextic(SexticParams::from_mu(1.0, 1))},
        {"sextic j=0", make_sextic(SexticParams::from_mu(1.0, 0))},
        {"morse j=0", make_morse(MorseParams::from_mu(1.0, 1.0, 1.0, 0))}};
    for (const auto& [name, m] : fixtures) {
      const auto grid = default_grid(m.family, 2000);
      const auto levels = solve(m).levels;
      for (std::size_t i = 0; i < levels.size(); ++i) {
        const auto conv = fd_convergence(m, levels[i], grid);
        o.require(conv.coarse.defect <= 5e-3, fmt::format("{} level {}: defect {:.2e}", name, i, conv.coarse.defect));
        o.require(conv.ratio >= 3.2 && conv.ratio <= 4.8, fmt::format("{} level {}: ratio {:.3f}", name, i, conv.ratio));
        o.detail += fmt::format("{}{}[{}] {:.1e} x{:.3f}", o.detail.empty() ? "" : ", ", name, i, conv.coarse.defect,
                                conv.ratio);
      }
    }
    return o;
  });

  report(9, "Reality-region scan: |Im E| <= 1e-10 inside, > 0.1 at 1.5x the boundary, shift flag flips", [] {
    Outcome o;
    struct Case {
      std::string name;
      cli::ModelOptions opts;
      double boundary;
    };
    // sextic: mu^2 < 2; Morse with b = (i mu - 1)/2, a = d = 1: 16ad > mu^2.
    const std::vector<Case> cases{{"sextic j=1/2", {.family = "sextic", .two_j = 1}, std::sqrt(2.0)},
                                  {"morse j=1/2", {.family = "morse", .two_j = 1, .b_real = -0.5}, 4.0}};
    for (const auto& cs : cases) {
      std::vector<double> inside;
      for (double mu = 0.0; mu < cs.boundary - 1e-9; mu += 0.1) inside.push_back(mu);
      double worst_in = 0.0;
      for (const auto& row : scan_rows(cs.opts, inside)) {
        worst_in = std::max(worst_in, std::abs(std::stod(row[5])));
        o.require(row[7] == "1", cs.name + ": shift flag unset inside");
      }
      double min_out = INFINITY;
      for (const auto& row : scan_rows(cs.opts, {1.5 * cs.boundary})) {
        min_out = std::min(min_out, std::abs(std::stod(row[5])));
        o.require(row[7] == "0", cs.name + ": shift flag set outside");
      }
      o.require(worst_in <= 1e-10, fmt::format("{}: inside |Im| {:.2e}", cs.name, worst_in));
      o.require(min_out > 0.1, fmt::format("{}: outside |Im| {:.3g}", cs.name, min_out));
      o.detail += fmt::format("{}{}: {} points inside max|Im| {:.1e}, outside min|Im| {:.3g}",
                              o.detail.empty() ? "" : "; ", cs.name, inside.size(), worst_in, min_out);
    }
    return o;
  });

  report(10, "PT symmetry: false for the four fixtures at mu=1, true for the sextic mu=0 degenerations", [] {
    Outcome o;
    const std::vector<std::pair<std::string, QesModel>> at_one{
        {"sextic j=0", make_sextic(SexticParams::from_mu(1.0, 0))},
        {"sextic j=1/2", make_sextic(SexticParams::from_mu(1.0, 1))},
        {"morse j=0", make_morse(MorseParams::from_mu(1.0, 1.0, 1.0, 0))},
        {"morse j=1/2", make_morse(MorseParams::from_mu(1.0, 1.0, 1.0, 1))}};
    for (const auto& [name, m] : at_one) {
      const auto s = solve(m);
      o.require(!is_pt_symmetric(m, s.common.shift.value_or(Complex{})), name + " reported PT-symmetric");
    }
    for (int two_j : {0, 1}) {
      const auto m = make_sextic(SexticParams::from_mu(0.0, two_j));
      o.require(is_pt_symmetric(m, solve(m).common.shift.value_or(Complex{})),
                fmt::format("sextic 2j={} mu=0 not PT-symmetric", two_j));
    }
    // Morse at mu = 0 keeps b = -3/2 real but swaps unequal e^{x} and e^{-x}
    // coefficients under x -> -x; it is symmetric only for a = d, b = -j.
    int morse_true = 0;
    for (int two_j : {0, 1}) {
      const auto m = make_morse(MorseParams::from_mu(1.0, 1.0, 0.0, two_j));
      morse_true += is_pt_symmetric(m, solve(m).common.shift.value_or(Complex{})) ? 1 : 0;
    }
    o.detail = fmt::format("info: Morse mu=0 (b=-3/2) PT-symmetric in {}/2 cases; b=-j case: {}", morse_true,
                           is_pt_symmetric(make_morse({1.0, 1.0, -0.5, 1}), 0.0));
    return o;
  });

  report(11, "Normalizability: norm finite and doubling-stable for all fixtures; sextic j=0 matches oracle (1e-6)", [] {
    Outcome o;
    const std::vector<std::pair<std::string, QesModel>> fixtures{
        {"sextic j=0", make_sextic(SexticParams::from_mu(1.0, 0))},
        {"sextic j=1/2", make_sextic(SexticParams::from_mu(1.0, 1))},
        {"morse j=0", make_morse(MorseParams::from_mu(1.0, 1.0, 1.0, 0))},
        {"morse j=1/2", make_morse(MorseParams::from_mu(1.0, 1.0, 1.0, 1))}};
    for (const auto& [name, m] : fixtures) {
      const double half_width = m.family == Family::sextic ? 6.0 : 8.0;
      for (const auto& s : solve(m).levels) {
        const Wavefunction w{m, s};
        const double n = norm_squared(w);
        const double n1 = simpson_norm(w, -half_width, half_width, 1e-3);
        const double n2 = simpson_norm(w, -2.0 * half_width, 2.0 * half_width, 1e-3);
        o.require(std::isfinite(n) && n > 0.0, name + ": norm not finite");
        o.require(std::abs(n2 - n1) <= 1e-10 * n, fmt::format("{}: doubling changed norm by {:.2e}", name, n2 - n1));
        o.require(std::abs(n - n2) <= 1e-9 * n, fmt::format("{}: norm {} vs quadrature {}", name, n, n2));
      }
    }
    const auto m = make_sextic(SexticParams::from_mu(1.0, 0));
    const double n = norm_squared({m, solve(m).levels.at(0)});
    o.require(std::abs(n - kSexticJ0Norm) <= 1e-6, fmt::format("sextic j=0 norm {:.12f}", n));
    o.detail += fmt::format("sextic j=0 norm {:.13f} vs oracle {:.13f}", n, kSexticJ0Norm);
    return o;
  });

  report(12, "Partner identity: V+ - V- = 2W' to 1e-12 relative at 50 random points per family", [] {
    Outcome o;
    std::mt19937_64 rng(20240613);
    std::uniform_real_distribution<double> ux(-3.0, 3.0);
    const std::vector<std::pair<std::string, QesModel>> families{
        {"sextic even", make_sextic({draw(rng, 2.0), 2, Sector::even})},
        {"sextic odd", make_sextic({draw(rng, 2.0), 2, Sector::odd})},
        {"morse", make_morse({draw(rng, 2.0, 0.2), draw(rng, 2.0, 0.2), draw(rng, 2.0), 2})}};
    double worst = 0.0;
    for (const auto& [name, m] : families) {
      const auto p = susy_partner(m);
      for (int i = 0; i < 50; ++i) {
        double x = ux(rng);
        if (p.is_pole(x)) x = 0.5;
        const Complex vp = *p.v_plus(x), vm = *p.v_minus(x), dw = *p.two_dw(x);
        const double scale = std::max({std::abs(vp), std::abs(vm), std::abs(dw), 1.0});
        worst = std::max(worst, std::abs(vp - vm - dw) / scale);
      }
    }
    o.require(worst <= 1e-12, fmt::format("worst {:.2e}", worst));
    o.detail += fmt::format("worst relative defect {:.2e}", worst);
    return o;
  });

  fmt::print("{} of 12 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
