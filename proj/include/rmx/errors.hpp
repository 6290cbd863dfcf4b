#pragma once

#include <stdexcept>
#include <string>

namespace rmx {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Arithmetic between scalars of different cyclotomic fields.
struct ConductorMismatch : Error {
    using Error::Error;
};

struct DivisionByZero : Error {
    using Error::Error;
};

// Element/operand does not belong to the expected group or algebra.
struct SpecMismatch : Error {
    using Error::Error;
};

struct ParseError : Error {
    ParseError(const std::string &msg, std::size_t position)
        : Error(msg + " (at position " + std::to_string(position) + ")"),
          position(position) {}
    std::size_t position;
};

} // namespace rmx
