#pragma once

#include <stdexcept>
#include <string>

namespace lebedev {

// Caller supplied arguments outside the domain of an operation.
struct PreconditionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// The computation itself could not reach the requested accuracy.
struct NumericalFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct PoleError : PreconditionError { using PreconditionError::PreconditionError; };
struct ParameterPole : PreconditionError { using PreconditionError::PreconditionError; };
struct PrefactorPole : PreconditionError { using PreconditionError::PreconditionError; };
struct OutOfStrip : PreconditionError { using PreconditionError::PreconditionError; };
struct ContourError : PreconditionError { using PreconditionError::PreconditionError; };
struct IntegrabilityError : PreconditionError { using PreconditionError::PreconditionError; };
struct DecayError : PreconditionError { using PreconditionError::PreconditionError; };
struct HypothesisError : PreconditionError { using PreconditionError::PreconditionError; };
struct GrowthError : PreconditionError { using PreconditionError::PreconditionError; };

struct NoConvergence : NumericalFailure { using NumericalFailure::NumericalFailure; };
struct Divergent : NumericalFailure { using NumericalFailure::NumericalFailure; };

}  // namespace lebedev
