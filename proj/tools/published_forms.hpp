#pragma once

#include <optional>
#include <vector>

#include "qes/families.hpp"
#include "qes/spectrum.hpp"
#include "report.hpp"

namespace qes::cli {

/// How a model was specified on the command line. The published closed
/// forms are written in terms of μ, so they only apply to μ-driven inputs.
struct MuInput {
  std::optional<double> mu;
  double b_real = -1.5;
};

/// Published closed forms for the four fixture families (sextic j = 0, 1/2
/// with a = iμ; Morse j = 0, 1/2 with b = (iμ - 3)/2), each set against the
/// computed value. Empty for any other input.
std::vector<PublishedForm> published_forms(const QesModel& model, const MuInput& input, const QesSpectrum& spectrum);

}  // namespace qes::cli
