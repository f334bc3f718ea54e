#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qnull {

// Base class for every error raised by the kernel.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ZeroDivision : public Error {
public:
    ZeroDivision() : Error("division by the zero quaternion") {}
};

class VariableCountMismatch : public Error {
public:
    VariableCountMismatch(std::size_t lhs, std::size_t rhs)
        : Error("variable count mismatch: " + std::to_string(lhs) + " vs " + std::to_string(rhs)) {}
};

class NonCommutingPoint : public Error {
public:
    NonCommutingPoint(std::size_t first, std::size_t second)
        : Error("point coordinates " + std::to_string(first) + " and " + std::to_string(second) +
                " do not commute"),
          first_(first), second_(second) {}

    std::size_t first() const noexcept { return first_; }
    std::size_t second() const noexcept { return second_; }

private:
    std::size_t first_;
    std::size_t second_;
};

// Thrown when a certificate's final identity fails to hold. Never recoverable.
class VerificationFailed : public Error {
public:
    using Error::Error;
};

// Raised from Buchberger's loop when a stop was requested.
class Cancelled : public Error {
public:
    Cancelled() : Error("computation cancelled") {}
};

}  // namespace qnull
