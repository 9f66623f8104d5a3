#pragma once

#include <stdexcept>
#include <string>

namespace holodisc {

/// Base class for all errors raised by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Requested (family, rank) pair is outside the supported catalog.
struct UnsupportedTypeError : Error {
    using Error::Error;
};

/// A root argument was the zero vector.
struct ZeroRootError : Error {
    using Error::Error;
};

/// The chosen simple root does not carry coefficient 1 in the highest root.
struct NotHermitianError : Error {
    using Error::Error;
};

/// A highest-weight specification violates dominance or integrality.
struct NonDominantError : Error {
    using Error::Error;
};

/// Weight enumeration exceeded the configured size bound.
struct SizeLimitError : Error {
    using Error::Error;
};

/// Restricted-root multiplicities failed an internal consistency check.
/// Signals an implementation bug, never a valid outcome.
struct MultiplicityMismatchError : Error {
    using Error::Error;
};

/// Two algebraically equivalent formulas disagreed. Implementation bug.
struct InternalIdentityError : Error {
    using Error::Error;
};

/// Adaptive quadrature exhausted its subdivision budget or produced
/// a non-finite value.
struct QuadratureFailureError : Error {
    using Error::Error;
};

} // namespace holodisc
