#pragma once

#include <stdexcept>
#include <string>

namespace ncheeger {

// Base class for every recoverable error raised by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DuplicateEdgeError : Error { using Error::Error; };
struct NonPositiveWeightError : Error { using Error::Error; };
struct DisconnectedGraphError : Error { using Error::Error; };
struct UnknownVertexError : Error { using Error::Error; };
struct OmegaTooSmallError : Error { using Error::Error; };
struct EmptyVertexBoundaryError : Error { using Error::Error; };
struct EmptyOrFullSubsetError : Error { using Error::Error; };
struct WrongUniverseError : Error { using Error::Error; };
struct TooLargeForExhaustiveError : Error { using Error::Error; };
struct ConstantFunctionError : Error { using Error::Error; };
struct ZeroDenominatorError : Error { using Error::Error; };
struct NotSymmetricError : Error { using Error::Error; };
struct NonPositiveMassError : Error { using Error::Error; };
struct NoConvergenceError : Error { using Error::Error; };
struct InvalidStartError : Error { using Error::Error; };
struct DuplicateVertexError : Error { using Error::Error; };

// Malformed input file; carries the 1-based line number.
struct ParseError : Error {
    int line;
    ParseError(int line_, const std::string& message)
        : Error("line " + std::to_string(line_) + ": " + message), line(line_) {}
};

}  // namespace ncheeger
