#pragma once

#include <stdexcept>
#include <string>

namespace qb {

/// Base class for all errors raised by the simulator.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Operands built from different BasisSpecs, or matrix shapes that do not match.
struct DimensionMismatch : Error {
    using Error::Error;
};

/// Requested truncation leaves more than the allowed tail population outside
/// the retained Fock levels.  Signals that the cavity cutoff is too small.
struct TruncationError : Error {
    using Error::Error;
};

/// Tr{op rho} came out with an imaginary part large enough to indicate a
/// corrupted state or a non-Hermitian observable.
struct ImaginaryResidueError : Error {
    using Error::Error;
};

/// The adaptive stepper could not meet the requested tolerance.
struct StepFailure : Error {
    using Error::Error;
};

/// A state failed its physicality checks (Hermiticity, trace, positivity).
struct PhysicalityError : Error {
    using Error::Error;
};

/// A trajectory has no first local maximum; the time window is too short.
struct NoMaximumError : Error {
    using Error::Error;
};

/// Superoperator construction refused: dim^2 x dim^2 would be too large.
struct DimensionGuard : Error {
    using Error::Error;
};

/// Malformed CLI flags or config documents.
struct ConfigError : Error {
    using Error::Error;
};

} // namespace qb
