#pragma once

#include <stdexcept>
#include <string>

namespace fplab {

/// Invalid or inconsistent numeric parameters (sizes, thresholds, ranges).
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An instance exceeds a configured size guard.
class GuardError : public ParameterError {
 public:
  using ParameterError::ParameterError;
};

/// Malformed input file or JSON document. The message names the offending field.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A witness or partition precondition does not hold.
class WitnessError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace fplab
