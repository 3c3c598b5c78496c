#pragma once

#include <stdexcept>
#include <string>

namespace darx {

/// Base class for all errors raised by the kernel.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// evaluate() met a jet variable with no value assigned.
struct UnboundJet : Error {
    using Error::Error;
};

/// Bell polynomial index pair out of range (k > n).
struct BadIndex : Error {
    using Error::Error;
};

/// Principal symbol requested for the zero operator.
struct ZeroOperator : Error {
    using Error::Error;
};

/// Frame restriction met a mixed (x and y) jet of the gauge exponent.
struct MixedAlphaJet : Error {
    using Error::Error;
};

/// An operator expected to be free of mixed derivatives has a Dx^i*Dy^j term.
struct MixedDerivative : Error {
    using Error::Error;
};

/// Parse failure, with 1-based source position.
struct SyntaxError : Error {
    int line;
    int column;
    SyntaxError(const std::string& what, int line_, int column_)
        : Error(what + " (line " + std::to_string(line_) + ", column " +
                std::to_string(column_) + ")"),
          line(line_),
          column(column_) {}
};

/// A derivative symbol or atom carries a negative exponent.
struct NegativePower : SyntaxError {
    using SyntaxError::SyntaxError;
};

}  // namespace darx
