#pragma once

#include <stdexcept>
#include <string>

namespace vcell {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Bad argument or domain violation.
class DomainError : public Error {
public:
    using Error::Error;
};

// Truncation or coefficient-window violation.
class TruncationError : public Error {
public:
    using Error::Error;
};

// Iteration, quadrature or extrapolation failed to settle.
class ConvergenceError : public Error {
public:
    using Error::Error;
};

// Cancellation ate the available digits.
class PrecisionError : public Error {
public:
    using Error::Error;
};

}  // namespace vcell
