#pragma once

#include <stdexcept>
#include <string>

namespace rreg {

/// Inputs outside the mathematical domain: r dividing q, q invalid for a
/// family, a catalog that is unavailable.
class DomainError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A broken internal invariant (non-exact division, overlapping row guards).
/// Seeing one of these means a bug, not bad input.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Malformed catalog text. Carries the 1-based line number.
class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

    int line() const noexcept { return line_; }

private:
    int line_;
};

} // namespace rreg
