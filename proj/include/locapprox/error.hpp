// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace locapprox {

/// Malformed input or a violated precondition.
class ValidationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A configured size cap was exceeded or the request is infeasible at desk scale.
class ResourceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An interpretation scheme produced an edge set that is not symmetric or
/// anti-reflexive.
class SchemeError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Parse failure with a 1-based line number attached.
class ParseError : public ValidationError {
public:
    ParseError(std::size_t line, const std::string& msg)
        : ValidationError("line " + std::to_string(line) + ": " + msg), line_(line) {}
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

}  // namespace locapprox
