#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dompoly {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A precondition on an argument was violated.
class InvalidArgument : public Error {
public:
    using Error::Error;
};

/// The input is too large for the fixed-width representation or the brute-force cap.
class CapacityError : public Error {
public:
    using Error::Error;
};

/// Two independent computations that must agree did not.
class IntegrityError : public Error {
public:
    using Error::Error;
};

/// Malformed text input. `line()` is 1-based; 0 means "not tied to a line".
class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& what)
        : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what), line_(line)
    {
    }

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

} // namespace dompoly
