#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "qes/cpoly.hpp"

namespace qes::cli {

struct FdReport {
  Complex refined{};
  double defect = 0.0;
  double defect_half_step = 0.0;
  /// defect / defect_half_step; absent when the half-step defect is zero.
  std::optional<double> ratio;

  friend bool operator==(const FdReport&, const FdReport&) = default;
};

struct LevelReport {
  Complex energy_base{};
  Complex energy_shifted{};
  std::vector<Complex> phi;
  int multiplicity = 1;
  double eigvec_residual = 0.0;
  double residual_sup = 0.0;
  std::optional<FdReport> fd;
  std::optional<double> norm_squared;

  friend bool operator==(const LevelReport&, const LevelReport&) = default;
};

/// One published closed form set against the computed value.
struct PublishedForm {
  std::string quantity;
  std::string published;
  std::optional<Complex> published_value;
  std::optional<Complex> computed_value;
  bool agrees = false;
  std::string note;

  friend bool operator==(const PublishedForm&, const PublishedForm&) = default;
};

struct GridReport {
  double x_min = 0.0;
  double x_max = 0.0;
  int n_points = 0;

  friend bool operator==(const GridReport&, const GridReport&) = default;
};

struct VerificationReport {
  bool passed = false;
  GridReport grid;
  std::vector<std::string> failures;

  friend bool operator==(const VerificationReport&, const VerificationReport&) = default;
};

struct RunReport {
  std::string command;
  std::string family;
  std::optional<std::string> sector;  // sextic only
  std::optional<double> mu;
  Complex a{};
  std::optional<Complex> b;  // Morse only
  std::optional<Complex> d;  // Morse only
  int two_j = 0;
  Complex shift{};
  bool common_shift_found = false;
  double imag_spread = 0.0;
  std::vector<LevelReport> levels;
  double residual_sup = 0.0;
  std::optional<double> fd_defect;
  bool pt_symmetric = false;
  std::vector<PublishedForm> published_forms;
  std::optional<VerificationReport> verification;

  friend bool operator==(const RunReport&, const RunReport&) = default;
};

void to_json(nlohmann::ordered_json& j, const RunReport& r);
void from_json(const nlohmann::ordered_json& j, RunReport& r);

/// Pretty-printed, deterministic serialization.
std::string serialize(const RunReport& r);
RunReport parse_report(const std::string& text);

nlohmann::ordered_json complex_to_json(Complex c);
Complex complex_from_json(const nlohmann::ordered_json& j);

}  // namespace qes::cli
