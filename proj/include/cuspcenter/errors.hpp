#pragma once

#include <stdexcept>
#include <string>

namespace cuspcenter {

/// Base of every error raised by the library. Validation errors (bad
/// parameters, scale limits) derive from InvalidInput so that callers can map
/// them to a different exit status than verification failures.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InvalidInput : public Error {
public:
    using Error::Error;
};

class InvalidPrime : public InvalidInput {
public:
    using InvalidInput::InvalidInput;
};

class DegenerateBlock : public InvalidInput {
public:
    using InvalidInput::InvalidInput;
};

class SupercuspidalCase : public InvalidInput {
public:
    using InvalidInput::InvalidInput;
};

class ScaleLimit : public InvalidInput {
public:
    using InvalidInput::InvalidInput;
};

class ZeroArgument : public InvalidInput {
public:
    using InvalidInput::InvalidInput;
};

class ZeroElement : public InvalidInput {
public:
    using InvalidInput::InvalidInput;
};

/// A computed quantity contradicts a proven statement. Always a bug in the
/// formulas or the arithmetic, never bad user input.
class VerificationFailure : public Error {
public:
    using Error::Error;
};

class IntegralityFailure : public VerificationFailure {
public:
    using VerificationFailure::VerificationFailure;
};

class DegreeMismatch : public VerificationFailure {
public:
    using VerificationFailure::VerificationFailure;
};

class NoSolution : public VerificationFailure {
public:
    using VerificationFailure::VerificationFailure;
};

class AssertionFailure : public VerificationFailure {
public:
    using VerificationFailure::VerificationFailure;
};

class RelationFailure : public VerificationFailure {
public:
    using VerificationFailure::VerificationFailure;
};

}  // namespace cuspcenter
