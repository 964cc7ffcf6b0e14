#pragma once

#include <stdexcept>
#include <string>

namespace nilcoh {

// Base for every structured failure raised by the library. `kind()` is a
// stable machine-readable tag; what() carries the human diagnostic.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& msg)
        : std::runtime_error(msg), kind_(std::move(kind)) {}
    const std::string& kind() const { return kind_; }

private:
    std::string kind_;
};

struct NotHermitianError : Error {
    explicit NotHermitianError(const std::string& msg = "matrix is not Hermitian")
        : Error("NotHermitian", msg) {}
};

struct ComposeNonzeroError : Error {
    explicit ComposeNonzeroError(const std::string& msg = "d_out * d_in != 0")
        : Error("ComposeNonzero", msg) {}
};

struct DimensionTooLargeError : Error {
    explicit DimensionTooLargeError(const std::string& msg)
        : Error("DimensionTooLarge", msg) {}
};

// Violating basis triple, 0-based indices.
struct AntisymmetryViolationError : Error {
    int i, j, k;
    AntisymmetryViolationError(int i_, int j_, int k_, const std::string& msg)
        : Error("AntisymmetryViolation", msg), i(i_), j(j_), k(k_) {}
};

struct JacobiViolationError : Error {
    int i, j, k;
    JacobiViolationError(int i_, int j_, int k_, const std::string& msg)
        : Error("JacobiViolation", msg), i(i_), j(j_), k(k_) {}
};

struct NotIntegrableError : Error {
    explicit NotIntegrableError(const std::string& msg = "complex structure is not integrable")
        : Error("NotIntegrable", msg) {}
};

struct NotNilpotentError : Error {
    explicit NotNilpotentError(const std::string& msg = "Lie algebra is not nilpotent")
        : Error("NotNilpotent", msg) {}
};

struct BasisModeMismatchError : Error {
    explicit BasisModeMismatchError(const std::string& msg = "forms live in different bases")
        : Error("BasisModeMismatch", msg) {}
};

struct ThetaNotClosedError : Error {
    explicit ThetaNotClosedError(const std::string& msg = "theta is not closed")
        : Error("ThetaNotClosed", msg) {}
};

struct ThetaZeroError : Error {
    explicit ThetaZeroError(const std::string& msg = "theta must be nonzero")
        : Error("ThetaZero", msg) {}
};

struct ZeroCovectorError : Error {
    explicit ZeroCovectorError(const std::string& msg = "covector must be nonzero")
        : Error("ZeroCovector", msg) {}
};

struct IncompatibleMetricError : Error {
    explicit IncompatibleMetricError(const std::string& msg)
        : Error("IncompatibleMetric", msg) {}
};

struct DegenerateFormError : Error {
    explicit DegenerateFormError(const std::string& msg = "form is degenerate")
        : Error("Degenerate", msg) {}
};

struct NotClosedError : Error {
    explicit NotClosedError(const std::string& msg = "form is not closed")
        : Error("NotClosed", msg) {}
};

// Positioned diagnostic for the algebra file parser. Lines and columns are 1-based.
struct ParseError : Error {
    int line, col;
    ParseError(int line_, int col_, const std::string& msg)
        : Error("SyntaxError",
                "line " + std::to_string(line_) + ", col " + std::to_string(col_) + ": " + msg),
          line(line_), col(col_) {}
};

struct SemanticError : Error {
    int line;
    SemanticError(int line_, const std::string& msg)
        : Error("SemanticError", "line " + std::to_string(line_) + ": " + msg), line(line_) {}
};

}  // namespace nilcoh
