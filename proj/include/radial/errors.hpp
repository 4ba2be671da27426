#pragma once

#include <stdexcept>
#include <string>

namespace radial {

// Argument outside the mathematical domain of an operation (x < 0, N < 2, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Input is valid in principle but outside the envelope the library is
// validated for (e.g. K > 30).
class RangeError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

// Caller broke an interface contract, e.g. passed a wavefunction carrying the
// wrong representation tag or equivalence partners with different K.
class ContractError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A numerical procedure failed: overflow, non-integrable tail, missing bracket,
// iteration budget exhausted. `detail` carries solver state for diagnostics.
class NumericalError : public std::runtime_error {
 public:
  NumericalError(const std::string& what, std::string detail = {})
      : std::runtime_error(what), detail_(std::move(detail)) {}

  const std::string& detail() const noexcept { return detail_; }

 private:
  std::string detail_;
};

}  // namespace radial
