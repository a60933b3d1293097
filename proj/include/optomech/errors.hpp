#pragma once

#include <stdexcept>
#include <string>

namespace optomech {

/// Raised when an input violates a documented precondition (bad parameter,
/// unsorted grid, step size above the stability bound).
class ParameterError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when a computation cannot produce a trustworthy result: residual
/// above tolerance, divergent trajectory, unstable drift matrix, response pole.
class NumericalError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

} // namespace optomech
