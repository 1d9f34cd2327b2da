#ifndef ISOPARITY_ERRORS_HPP
#define ISOPARITY_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace isoparity {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// arith
struct NotSquarefree : Error { using Error::Error; };
struct DegreeMismatch : Error { using Error::Error; };
struct ZeroElement : Error { using Error::Error; };
struct FactorBoundExceeded : Error { using Error::Error; };

// models
struct SingularModel : Error { using Error::Error; };

// localdata
struct NonIntegralModel : Error { using Error::Error; };

// isogeny
struct InvalidKernel : Error { using Error::Error; };
struct AlphaOutOfRange : Error { using Error::Error; };
struct BadReduction : Error { using Error::Error; };
struct BoundExceeded : Error { using Error::Error; };

// parity
struct GlobalUnsupported : Error { using Error::Error; };

// psi
struct MixedDegrees : Error { using Error::Error; };
struct Ambiguous : Error { using Error::Error; };
struct NoMatch : Error { using Error::Error; };
struct Underdetermined : Error { using Error::Error; };

// cases
struct InvalidResidue : Error { using Error::Error; };
struct EDoesNotDivide : Error { using Error::Error; };
struct WrongResidue : Error { using Error::Error; };

// harness; line is 1-based, 0 when not tied to a specific line
struct ParseError : Error {
    int line;
    ParseError(int line_, const std::string& what_)
        : Error("line " + std::to_string(line_) + ": " + what_), line(line_) {}
};
struct InvalidEntry : Error {
    int line;
    InvalidEntry(int line_, const std::string& what_)
        : Error("line " + std::to_string(line_) + ": " + what_), line(line_) {}
};

}  // namespace isoparity

#endif
