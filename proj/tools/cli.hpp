#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "published_forms.hpp"
#include "qes/analysis.hpp"
#include "report.hpp"

namespace qes::cli {

/// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitNumeric = 2;

/// Model flags as given on the command line; complex values as "re,im".
struct ModelOptions {
  std::string family = "sextic";
  int two_j = 0;
  std::optional<double> mu;
  std::optional<std::string> a, b, d;
  std::string sector = "even";
  double b_real = -1.5;
};

struct ResolvedModel {
  QesModel model;
  MuInput input;
};

/// Throws ValidationError on inconsistent or malformed flags.
ResolvedModel resolve_model(const ModelOptions& opts);

/// "re,im" or "re".
Complex parse_complex(const std::string& text);

RunReport solve_report(const ResolvedModel& rm);

struct VerifyOptions {
  std::optional<int> grid_n;
  std::optional<std::string> domain;  // "xmin,xmax"
  double inject_energy_error = 0.0;
};

/// Largest half-step fd defect accepted when the Richardson ratio is
/// uninformative (both defects at the solver's noise floor).
inline constexpr double kFdNoiseFloor = 1e-8;

RunReport verify_report(const ResolvedModel& rm, const VerifyOptions& opts);

/// Parses "lo:hi:step"; an empty list when hi < lo.
std::vector<double> parse_mu_range(const std::string& text);

void write_scan_csv(const ModelOptions& base, const std::vector<double>& mus, std::ostream& out);

/// Partner table as pretty-printed JSON.
std::string partner_table(const ResolvedModel& rm, int samples, const std::string& range);

/// Full command-line entry point.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace qes::cli
