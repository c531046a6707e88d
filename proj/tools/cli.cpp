#include "cli.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <ostream>

#include "CLI11.hpp"
#include "qes/error.hpp"

namespace qes::cli {

using json = nlohmann::ordered_json;

namespace {

constexpr std::size_t kMaxScanPoints = 100000;
constexpr double kResidualBound = 1e-10;

double parse_double(std::string_view s, std::string_view what) {
  // from_chars rejects a leading '+'
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size() || !std::isfinite(v))
    throw ValidationError(fmt::format("{}: '{}' is not a finite number", what, s));
  return v;
}

std::pair<double, double> parse_pair(const std::string& text, std::string_view what) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw ValidationError(fmt::format("{}: expected 'lo,hi', got '{}'", what, text));
  return {parse_double(std::string_view(text).substr(0, comma), what),
          parse_double(std::string_view(text).substr(comma + 1), what)};
}

Sector parse_sector(const std::string& s) {
  if (s == "even") return Sector::even;
  if (s == "odd") return Sector::odd;
  throw ValidationError("--sector must be 'even' or 'odd'");
}

std::vector<double> report_sample(const QesModel& m) { return default_residual_sample(m.family); }

LevelReport level_report(const QesModel& model, const QesSolution& s, std::span<const double> xs) {
  LevelReport l;
  l.energy_base = s.energy_base;
  l.energy_shifted = s.energy_shifted;
  l.phi.assign(s.phi.coeffs().begin(), s.phi.coeffs().end());
  l.phi.resize(static_cast<std::size_t>(model.rep.dim()));
  l.multiplicity = s.multiplicity;
  l.eigvec_residual = s.eigvec_residual;
  l.residual_sup = residual_sup({model, s}, xs);
  return l;
}

RunReport base_report(const ResolvedModel& rm, const QesSpectrum& spectrum, std::string command) {
  const auto& m = rm.model;
  RunReport r;
  r.command = std::move(command);
  r.family = std::string(to_string(m.family));
  r.mu = rm.input.mu;
  r.two_j = m.rep.two_j();
  if (m.family == Family::sextic) {
    r.sector = std::string(to_string(m.sextic().sector));
    r.a = m.sextic().a;
  } else {
    r.a = m.morse().a;
    r.b = m.morse().b;
    r.d = m.morse().d;
  }
  r.common_shift_found = spectrum.common.found();
  r.shift = spectrum.common.shift.value_or(Complex{});
  r.imag_spread = spectrum.common.spread;
  const auto xs = report_sample(m);
  for (const auto& s : spectrum.levels) {
    r.levels.push_back(level_report(m, s, xs));
    r.residual_sup = std::max(r.residual_sup, r.levels.back().residual_sup);
  }
  r.pt_symmetric = is_pt_symmetric(m, r.shift);
  r.published_forms = published_forms(m, rm.input, spectrum);
  return r;
}

GridSpec verify_grid(const QesModel& m, const VerifyOptions& opts) {
  auto grid = default_grid(m.family, opts.grid_n.value_or(2000));
  if (opts.domain) {
    const auto [lo, hi] = parse_pair(*opts.domain, "--domain");
    grid.x_min = lo;
    grid.x_max = hi;
  }
  grid.validate();
  return grid;
}

}  // namespace

Complex parse_complex(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) return {parse_double(text, "complex value"), 0.0};
  const auto [re, im] = parse_pair(text, "complex value");
  return {re, im};
}

ResolvedModel resolve_model(const ModelOptions& o) {
  if (o.two_j < 0) throw ValidationError("--two-j must be non-negative");
  if (static_cast<std::size_t>(o.two_j) + 1 > kMaxBlockDim)
    throw ValidationError(fmt::format("--two-j must be at most {}", kMaxBlockDim - 1));
  if (o.mu && !std::isfinite(*o.mu)) throw ValidationError("--mu must be finite");
  ResolvedModel rm;
  rm.input = {o.mu, o.b_real};

  if (o.family == "sextic") {
    if (o.b || o.d) throw ValidationError("--b and --d apply to the morse family only");
    if (o.mu.has_value() == o.a.has_value()) throw ValidationError("sextic needs exactly one of --mu or --a");
    const auto sector = parse_sector(o.sector);
    rm.model = make_sextic(o.mu ? SexticParams::from_mu(*o.mu, o.two_j, sector)
                                : SexticParams{parse_complex(*o.a), o.two_j, sector});
    return rm;
  }
  if (o.family == "morse") {
    if (o.sector != "even") throw ValidationError("--sector applies to the sextic family only");
    if (o.mu.has_value() == o.b.has_value()) throw ValidationError("morse needs exactly one of --mu or --b");
    const Complex a = o.a ? parse_complex(*o.a) : Complex{1.0};
    const Complex d = o.d ? parse_complex(*o.d) : Complex{1.0};
    rm.model = make_morse(o.mu ? MorseParams::from_mu(a, d, *o.mu, o.two_j, o.b_real)
                               : MorseParams{a, d, parse_complex(*o.b), o.two_j});
    return rm;
  }
  throw ValidationError("--family must be 'sextic' or 'morse'");
}

RunReport solve_report(const ResolvedModel& rm) { return base_report(rm, solve_model(rm.model), "solve"); }

RunReport verify_report(const ResolvedModel& rm, const VerifyOptions& opts) {
  if (!std::isfinite(opts.inject_energy_error)) throw ValidationError("--inject-energy-error must be finite");
  const auto grid = verify_grid(rm.model, opts);

  auto spectrum = solve_model(rm.model);
  for (auto& s : spectrum.levels) {
    s.energy_base += opts.inject_energy_error;
    s.energy_shifted += opts.inject_energy_error;
  }
  auto r = base_report(rm, spectrum, "verify");

  VerificationReport v;
  v.grid = {grid.x_min, grid.x_max, grid.n_points};
  if (r.residual_sup > kResidualBound)
    v.failures.push_back(fmt::format("residual_sup {:.3e} exceeds {:.0e}", r.residual_sup, kResidualBound));

  double worst_defect = 0.0;
  for (std::size_t i = 0; i < spectrum.levels.size(); ++i) {
    const Wavefunction w{rm.model, spectrum.levels[i]};
    auto& level = r.levels[i];
    try {
      level.norm_squared = norm_squared(w);
    } catch (const Error&) {
      // non-decaying gauge: no norm to report
    }
    try {
      const auto c = fd_convergence(rm.model, spectrum.levels[i], grid);
      FdReport fd{c.coarse.refined_energy, c.coarse.defect, c.fine.defect, std::nullopt};
      if (c.fine.defect > 0.0) fd.ratio = c.ratio;
      level.fd = fd;
      worst_defect = std::max(worst_defect, c.coarse.defect);
      const bool second_order = fd.ratio && *fd.ratio >= 3.2 && *fd.ratio <= 4.8;
      if (!second_order && c.fine.defect > kFdNoiseFloor)
        v.failures.push_back(fmt::format("level {}: fd defect {:.3e} -> {:.3e} is not second order", i,
                                         c.coarse.defect, c.fine.defect));
    } catch (const Error& e) {
      v.failures.push_back(fmt::format("level {}: fd cross-check failed: {}", i, e.what()));
    }
  }
  r.fd_defect = worst_defect;
  v.passed = v.failures.empty();
  r.verification = std::move(v);
  return r;
}

std::vector<double> parse_mu_range(const std::string& text) {
  const auto first = text.find(':');
  const auto second = first == std::string::npos ? first : text.find(':', first + 1);
  if (second == std::string::npos) throw ValidationError("--mu-range: expected 'lo:hi:step'");
  const std::string_view t(text);
  const double lo = parse_double(t.substr(0, first), "--mu-range");
  const double hi = parse_double(t.substr(first + 1, second - first - 1), "--mu-range");
  const double step = parse_double(t.substr(second + 1), "--mu-range");
  if (!(step > 0.0)) throw ValidationError("--mu-range: step must be positive");
  if (hi < lo) return {};
  const double count = std::floor((hi - lo) / step + 1e-9) + 1.0;
  if (count > static_cast<double>(kMaxScanPoints)) throw ValidationError("--mu-range: too many points");
  std::vector<double> mus(static_cast<std::size_t>(count));
  for (std::size_t k = 0; k < mus.size(); ++k) mus[k] = lo + static_cast<double>(k) * step;
  return mus;
}

void write_scan_csv(const ModelOptions& base, const std::vector<double>& mus, std::ostream& out) {
  out << "mu,level,re_base,im_base,re_shifted,im_shifted,shift_im,common_shift_found\n";
  for (const double mu : mus) {
    auto opts = base;
    opts.mu = mu;
    const auto rm = resolve_model(opts);
    const auto s = solve_model(rm.model);
    const double shift_im = s.common.shift.value_or(Complex{}).imag();
    for (std::size_t i = 0; i < s.levels.size(); ++i) {
      const auto& l = s.levels[i];
      out << fmt::format("{:.17g},{},{:.17g},{:.17g},{:.17g},{:.17g},{:.17g},{}\n", mu, i, l.energy_base.real(),
                         l.energy_base.imag(), l.energy_shifted.real(), l.energy_shifted.imag(), shift_im,
                         s.common.found() ? 1 : 0);
    }
  }
}

std::string partner_table(const ResolvedModel& rm, int samples, const std::string& range) {
  if (samples < 1) throw ValidationError("--samples must be at least 1");
  const auto [lo, hi] = parse_pair(range, "--range");
  if (hi < lo) throw ValidationError("--range: xmin must not exceed xmax");

  const auto partner = susy_partner(rm.model);
  const auto opt = [](const std::optional<Complex>& c) { return c ? complex_to_json(*c) : json(nullptr); };
  json rows = json::array();
  for (int i = 0; i < samples; ++i) {
    const double x = samples == 1 ? lo : lo + (hi - lo) * i / (samples - 1);
    const auto vm = partner.v_minus(x);
    const auto vp = partner.v_plus(x);
    std::optional<Complex> diff;
    if (vm && vp) diff = *vp - *vm;
    rows.push_back(json{{"x", x},
                        {"superpotential", opt(partner.superpotential(x))},
                        {"v_minus", opt(vm)},
                        {"v_plus", opt(vp)},
                        {"difference", opt(diff)},
                        {"two_w_prime", opt(partner.two_dw(x))},
                        {"pole", partner.is_pole(x)}});
  }

  const auto& m = rm.model;
  json params{{"a", complex_to_json(m.family == Family::sextic ? m.sextic().a : m.morse().a)},
              {"b", m.family == Family::morse ? complex_to_json(m.morse().b) : json(nullptr)},
              {"d", m.family == Family::morse ? complex_to_json(m.morse().d) : json(nullptr)}};
  json table{{"schema_version", 1},
             {"command", "partner"},
             {"family", std::string(to_string(m.family))},
             {"sector", m.family == Family::sextic ? json(std::string(to_string(m.sextic().sector))) : json(nullptr)},
             {"parameters", std::move(params)},
             {"two_j", m.rep.two_j()},
             {"samples", std::move(rows)}};
  return table.dump(2) + "\n";
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Complex quasi-exactly-solvable potentials: solve, verify, scan, partner", "qes"};
  app.require_subcommand(1);

  ModelOptions model;
  const auto add_model_flags = [&](CLI::App* cmd, bool with_mu) {
    cmd->add_option("--family", model.family, "sextic or morse")->required();
    cmd->add_option("--two-j", model.two_j, "twice the spin j");
    if (with_mu) cmd->add_option("--mu", model.mu, "a = i*mu (sextic) or b = b_real + i*mu/2 (morse)");
    cmd->add_option("--a", model.a, "complex a as re,im");
    cmd->add_option("--b", model.b, "complex b as re,im (morse)");
    cmd->add_option("--d", model.d, "complex d as re,im (morse)");
    cmd->add_option("--b-real", model.b_real, "real part of b when --mu is given (morse)")->capture_default_str();
    cmd->add_option("--sector", model.sector, "even or odd (sextic)")->capture_default_str();
  };

  auto* solve = app.add_subcommand("solve", "solve the QES block and print a JSON report");
  add_model_flags(solve, true);

  VerifyOptions verify_opts;
  auto* verify = app.add_subcommand("verify", "solve and cross-check residuals, norms and a grid eigenvalue");
  add_model_flags(verify, true);
  verify->add_option("--grid-n", verify_opts.grid_n, "interior grid points (default 2000)");
  verify->add_option("--domain", verify_opts.domain, "grid interval as xmin,xmax");
  verify->add_option("--inject-energy-error", verify_opts.inject_energy_error, "test hook: add to every energy");

  std::string mu_range;
  auto* scan = app.add_subcommand("scan", "sweep mu and print CSV");
  add_model_flags(scan, false);
  scan->add_option("--mu-range", mu_range, "lo:hi:step")->required();

  int samples = 0;
  std::string range;
  auto* partner = app.add_subcommand("partner", "tabulate the W^2 -/+ W' partner pair as JSON");
  add_model_flags(partner, true);
  partner->add_option("--samples", samples, "number of sample points")->required();
  partner->add_option("--range", range, "xmin,xmax")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (solve->parsed()) {
      out << serialize(solve_report(resolve_model(model)));
    } else if (verify->parsed()) {
      const auto report = verify_report(resolve_model(model), verify_opts);
      out << serialize(report);
      if (!report.verification->passed) {
        for (const auto& f : report.verification->failures) err << "verification failed: " << f << '\n';
        return kExitNumeric;
      }
    } else if (scan->parsed()) {
      const auto mus = parse_mu_range(mu_range);
      // validate the flags once even when the range is empty
      auto probe = model;
      probe.mu = 0.0;
      resolve_model(probe);
      write_scan_csv(model, mus, out);
    } else if (partner->parsed()) {
      out << partner_table(resolve_model(model), samples, range);
    }
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "numeric failure: " << e.what() << '\n';
    return kExitNumeric;
  }
  return kExitOk;
}

}  // namespace qes::cli
