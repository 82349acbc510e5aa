#pragma once

#include <stdexcept>
#include <string>

namespace curvachay {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed input text; `position` is a byte offset into the input.
struct ParseError : Error {
    ParseError(const std::string& msg, std::size_t pos)
        : Error(msg + " (at offset " + std::to_string(pos) + ")"), position(pos) {}
    std::size_t position;
};

/// Structurally valid input that violates a precondition.
struct InvalidInput : Error {
    using Error::Error;
};

/// A configured resource cap was exhausted (coset budget, ball vertex cap).
/// Reported distinctly from invalid input: the computation might succeed
/// with a larger budget.
struct BudgetExceeded : Error {
    using Error::Error;
};

/// The graph does not certify a large enough ball around the query vertex.
struct InsufficientRadius : Error {
    using Error::Error;
};

/// The 2-sphere block of the Gamma2 form is singular, so the Schur
/// complement step is undefined.
struct SingularBlock : Error {
    using Error::Error;
};

}  // namespace curvachay
