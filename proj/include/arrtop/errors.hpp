#pragma once

#include <stdexcept>
#include <string>

namespace arrtop {

/// Base class for every domain error thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Input rejected before any computation starts (bad arrangement, bad file).
struct ValidationError : Error {
    using Error::Error;
};

/// Two objects that must share an ambient dimension do not.
struct DimensionMismatch : ValidationError {
    using ValidationError::ValidationError;
};

/// An arrangement lists two subspaces where one contains the other.
struct ContainmentViolation : ValidationError {
    using ValidationError::ValidationError;
};

/// A poset element index is out of range.
struct UnknownElement : Error {
    using Error::Error;
};

/// Upper bounds exist but have no least element; the semilattice
/// invariant is broken, which indicates corrupted input.
struct NotASemilattice : Error {
    using Error::Error;
};

/// A vertex set of atoms has an empty intersection.
struct NoJoin : Error {
    using Error::Error;
};

/// A simplex set is not downward closed.
struct NotAComplex : Error {
    using Error::Error;
};

/// No removable free pair was found while executing a collapse sequence.
struct StuckCollapse : Error {
    using Error::Error;
};

/// Malformed input file; the message names the offending field.
struct ParseError : Error {
    using Error::Error;
};

/// A model would exceed the configured simplex budget.
struct SizeGuardExceeded : Error {
    using Error::Error;
};

}  // namespace arrtop
