#pragma once

#include <stdexcept>
#include <string>

namespace sdrlink {

// Base class for everything thrown by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Invalid parameter combination or malformed configuration input.
class ConfigError : public Error {
public:
    using Error::Error;
};

// Bit-stream length does not match what the operation needs.
class LengthError : public Error {
public:
    using Error::Error;
};

// NaN/Inf or otherwise undecodable sample in the input.
class InvalidSampleError : public Error {
public:
    using Error::Error;
};

// Sample counts disagree with the declared framing.
class FramingError : public Error {
public:
    using Error::Error;
};

// Scalar argument outside its mathematical domain.
class DomainError : public Error {
public:
    using Error::Error;
};

// Too few samples for a meaningful estimate.
class InsufficientDataError : public Error {
public:
    using Error::Error;
};

// Simulation budget too small for the requested confidence.
class InsufficientBudgetError : public Error {
public:
    using Error::Error;
};

// A derived result violated one of our own invariants.
class InternalError : public Error {
public:
    using Error::Error;
};

// Filesystem or stream failure.
class IoError : public Error {
public:
    using Error::Error;
};

} // namespace sdrlink
