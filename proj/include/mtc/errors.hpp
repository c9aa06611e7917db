#pragma once

#include <stdexcept>
#include <string>

namespace mtc {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Input/shape problems (CLI exit code 2).
struct InputError : Error { using Error::Error; };
struct DimensionMismatch : InputError { using InputError::InputError; };
struct ShapeMismatch : InputError { using InputError::InputError; };
struct LengthMismatch : InputError { using InputError::InputError; };
struct IncompleteTable : InputError { using InputError::InputError; };
struct TooLarge : InputError { using InputError::InputError; };
struct WrongDatum : InputError { using InputError::InputError; };

// Domain checks that failed on well-formed input (CLI exit code 1).
struct CheckError : Error { using Error::Error; };
struct NonIntegralFusion : CheckError { using CheckError::CheckError; };
struct NotASimpleCurrent : CheckError { using CheckError::CheckError; };
struct PhaseSnapFailure : CheckError { using CheckError::CheckError; };
struct NotScalar : CheckError { using CheckError::CheckError; };
struct SwapMissing : CheckError { using CheckError::CheckError; };
struct NotUnimodular : CheckError { using CheckError::CheckError; };
struct InvalidCocycle : CheckError { using CheckError::CheckError; };
struct NotClosed : CheckError { using CheckError::CheckError; };
struct NotCurrents : CheckError { using CheckError::CheckError; };
struct FixedPointsPresent : CheckError { using CheckError::CheckError; };
struct NotAdmissible : CheckError { using CheckError::CheckError; };
struct NegativeEntry : CheckError { using CheckError::CheckError; };
struct TruncationFailure : CheckError { using CheckError::CheckError; };
struct NoPhysicalM0 : CheckError { using CheckError::CheckError; };

}  // namespace mtc
