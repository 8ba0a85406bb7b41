#pragma once

#include <stdexcept>
#include <string>

namespace so5cg {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A label, key or argument violates a structural invariant (bad half-integer,
/// j-bar ordering, magnetic number out of range, unknown table row, ...).
class MalformedKey : public Error {
public:
    using Error::Error;
};

/// The requested coupling channel does not occur in the decomposition.
class ChannelAbsent : public Error {
public:
    using Error::Error;
};

/// A closed-form coefficient produced a negative radicand or a vanishing
/// denominator inside its physical domain. Always a transcription bug.
class FormulaDomainError : public Error {
public:
    using Error::Error;
};

/// Square root of a negative rational was requested.
class NegativeRadicand : public Error {
public:
    using Error::Error;
};

/// Numeric oracle: irrep larger than the configured dimension cap.
class DimensionCap : public Error {
public:
    using Error::Error;
};

/// Numeric oracle: a subspace came out with the wrong dimension.
class DegenerateBasis : public Error {
public:
    using Error::Error;
};

/// Numeric oracle: eigen-decomposition residual above tolerance.
class EigenFailure : public Error {
public:
    using Error::Error;
};

}  // namespace so5cg
