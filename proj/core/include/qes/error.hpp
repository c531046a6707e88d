#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace qes {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A computation produced a NaN or infinity.
class NumericOverflow : public Error {
 public:
  using Error::Error;
};

/// Caller-supplied parameters are outside the documented domain.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// An operator combination maps the polynomial module outside itself.
class InvarianceViolation : public Error {
 public:
  using Error::Error;
};

/// An iterative method hit its iteration cap. Carries the best iterate seen
/// and the defect measured at that iterate.
class ConvergenceFailure : public Error {
 public:
  ConvergenceFailure(const std::string& what, std::vector<std::complex<double>> best, double defect)
      : Error(what), best_(std::move(best)), defect_(defect) {}

  const std::vector<std::complex<double>>& best_iterate() const noexcept { return best_; }
  double defect() const noexcept { return defect_; }

 private:
  std::vector<std::complex<double>> best_;
  double defect_;
};

}  // namespace qes
