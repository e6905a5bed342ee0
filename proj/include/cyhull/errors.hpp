#pragma once

#include <stdexcept>
#include <string>

namespace cyhull {

// Base class for all toolkit errors. Specific types exist so callers can
// distinguish contract violations without parsing messages.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotPrime : Error {
    using Error::Error;
};
struct NotPrimePower : Error {
    using Error::Error;
};
struct NotCoprime : Error {
    using Error::Error;
};
struct TowerTooLarge : Error {
    using Error::Error;
};
struct InternalSearchExhausted : Error {
    using Error::Error;
};
struct DivisionByZero : Error {
    using Error::Error;
};
struct FieldMismatch : Error {
    using Error::Error;
};
struct NotADivisor : Error {
    using Error::Error;
};
struct NotInSubfield : Error {
    using Error::Error;
};
struct ZeroConstantTerm : Error {
    using Error::Error;
};
struct BothZero : Error {
    using Error::Error;
};
struct CoefficientNotInSubfield : Error {
    using Error::Error;
};
struct LengthMismatch : Error {
    using Error::Error;
};
struct LengthNotQmMinus1 : Error {
    using Error::Error;
};
struct ExponentZero : Error {
    using Error::Error;
};
struct DuplicateCoset : Error {
    using Error::Error;
};
struct NotNormal : Error {
    using Error::Error;
};
struct SameCoset : Error {
    using Error::Error;
};
struct DimensionMismatch : Error {
    using Error::Error;
};

}  // namespace cyhull
