#pragma once

#include <array>
#include <cstddef>
#include <stdexcept>
#include <string>

namespace hodgedr {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed input text. `location` is a field path ("J[1][2]") or "line:col".
class ParseError : public Error {
public:
    ParseError(std::string location, const std::string& what)
        : Error(location.empty() ? what : location + ": " + what), location_(std::move(location))
    {
    }
    const std::string& location() const noexcept { return location_; }

private:
    std::string location_;
};

// Well-formed input that describes an invalid mathematical object.
class ValidationError : public Error {
public:
    using Error::Error;
};

class JacobiViolation : public ValidationError {
public:
    JacobiViolation(std::array<std::size_t, 3> triple, const std::string& what)
        : ValidationError(what), triple_(triple)
    {
    }
    // 0-based indices of the basis triple on which the Jacobi sum is nonzero.
    const std::array<std::size_t, 3>& triple() const noexcept { return triple_; }

private:
    std::array<std::size_t, 3> triple_;
};

class NotNilpotent : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class BadIndex : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class JNotComplexStructure : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class MetricNotPositive : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class DegenerateOrientation : public Error {
public:
    using Error::Error;
};

// Raised when an internal consistency check fails; always a bug, never bad input.
class InternalInconsistency : public Error {
public:
    using Error::Error;
};

class NoStabilization : public Error {
public:
    using Error::Error;
};

class CheckFailed : public Error {
public:
    CheckFailed(std::string check, const std::string& what)
        : Error(check + ": " + what), check_(std::move(check))
    {
    }
    const std::string& check() const noexcept { return check_; }

private:
    std::string check_;
};

class SerreViolation : public CheckFailed {
public:
    using CheckFailed::CheckFailed;
};

class DegenerationViolation : public CheckFailed {
public:
    using CheckFailed::CheckFailed;
};

} // namespace hodgedr
