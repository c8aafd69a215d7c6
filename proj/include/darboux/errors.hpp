#pragma once

#include <stdexcept>
#include <string>

namespace darboux {

// Base class for all library failures. Subclasses map one-to-one onto the
// failure classes surfaced by the CLI exit codes.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// A chart was used with a space it does not belong to.
class ChartSpaceMismatch : public Error {
public:
    using Error::Error;
};

// Coordinates or parameters outside the declared domain (u <= 0, v = 0 at a
// centrifugal singularity, a >= 0 on DII, ...).
class DomainViolation : public Error {
public:
    using Error::Error;
};

// Closed-form expression evaluated at a pole of its denominator.
class SingularDenominator : public Error {
public:
    using Error::Error;
};

// Special-function argument/order outside the range the implementation
// guarantees accuracy for.
class OutOfSupportedRange : public Error {
public:
    using Error::Error;
};

// Result magnitude exceeds double range.
class Overflow : public Error {
public:
    using Error::Error;
};

// Whittaker M evaluated at a pole (2*nu a negative integer).
class PoleOfM : public Error {
public:
    using Error::Error;
};

// Potential/chart combination with no supported evaluation route.
class UnsupportedChart : public Error {
public:
    using Error::Error;
};

// Separation requested in a chart where the problem does not reduce to solved
// one-dimensional equations.
class NotSeparableHere : public Error {
public:
    using Error::Error;
};

// Closed-form level with a negative radicand (no real root).
class NegativeRadicand : public Error {
public:
    using Error::Error;
};

// Root scan found no sign change inside the search window.
class NoRootsInWindow : public Error {
public:
    using Error::Error;
};

// Iterative solver failed to reach tolerance.
class NonConvergence : public Error {
public:
    using Error::Error;
};

// Continuous-spectrum wave number would be imaginary (below threshold).
class EvanescentRegime : public Error {
public:
    using Error::Error;
};

// Wave-function request for a level that does not exist in the result.
class UnknownLevel : public Error {
public:
    using Error::Error;
};

// Finite-difference box too small: eigenfunction mass at the truncation edge.
class TruncationTooSmall : public Error {
public:
    using Error::Error;
};

// Bad CLI/RunConfig input.
class ConfigError : public Error {
public:
    using Error::Error;
};

} // namespace darboux
