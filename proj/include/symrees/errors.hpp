#ifndef SYMREES_ERRORS_HPP
#define SYMREES_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace symrees {

/// Base class for all errors raised by the library.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Two values live in different rings / field configurations.
struct mismatch_error : error {
    using error::error;
};

/// Division by zero, inverse of zero, inexact division.
struct division_error : error {
    using error::error;
};

/// gcd(lift, modulus) nontrivial: the asserted-irreducible modulus is composite.
struct non_invertible_error : error {
    using error::error;
};

/// A precondition on the mathematical input failed (unit ideal where proper
/// expected, inhomogeneous input, not a system of parameters, wrong method...).
struct input_error : error {
    using error::error;
};

/// A configured resource cap was exceeded (GB degree cap, truncation cap,
/// search attempts, iteration limits).
struct resource_error : error {
    using error::error;
};

/// Jobfile / polynomial text could not be parsed.
struct parse_error : error {
    int line;
    int column;
    parse_error(const std::string& msg, int line_, int col_)
        : error(msg + " (line " + std::to_string(line_) + ", column " + std::to_string(col_) + ")"),
          line(line_), column(col_) {}
};

} // namespace symrees

#endif
