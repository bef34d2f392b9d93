// Copyright (c) kvar contributors
// SPDX-License-Identifier: Apache-2.0

#ifndef KVAR_ERRORS_HPP
#define KVAR_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace kvar {

/// Vectors or operators from different spaces were mixed.
struct SpaceMismatchError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// A signature with fewer than two entries, or more than the supported cap.
struct DimensionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Signature entries outside {+1, -1}.
struct SignatureError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// The requested form is definite (all +1 or all -1), not indefinite.
struct DefiniteFormError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// A symmetry whose associated form lost involutivity or positivity.
struct InvalidSymmetryError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Angular operator with spectral norm at or above the contraction margin.
struct NotContractiveError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// A weight direction with a vanishing positive or negative component.
struct DegenerateDirectionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// A path could not be evaluated at some abscissa.
struct EvaluationError : std::runtime_error {
  EvaluationError(const std::string& what, double where)
      : std::runtime_error(what), abscissa(where) {}
  double abscissa;
};

/// The quadrature oracle needs a differentiable path family.
struct OracleUnavailableError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A variation estimate hit the depth cap without converging where a
/// converged value is required.
struct NotConvergedError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// BV elements over different intervals or weights cannot be combined.
struct IncompatibleBvError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Partition does not span the path's interval.
struct IntervalMismatchError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Malformed job configuration (maps to CLI exit code 2).
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace kvar

#endif  // KVAR_ERRORS_HPP
