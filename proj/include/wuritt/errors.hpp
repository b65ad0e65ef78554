#ifndef WURITT_ERRORS_HPP
#define WURITT_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <vector>

namespace wuritt {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Caller misuse: field/order mismatch, invalid construction, bad arguments.
struct UsageError : Error {
    using Error::Error;
};

/// Inverse of zero requested.
struct DivisionByZeroError : UsageError {
    DivisionByZeroError() : UsageError("division by zero") {}
    explicit DivisionByZeroError(const std::string& what) : UsageError(what) {}
};

/// Exponent arithmetic left the supported range. Hard stop, never wraparound.
struct OverflowError : Error {
    using Error::Error;
};

/// An iteration or recursion safety ceiling was exceeded. Termination is
/// guaranteed by theory, so hitting a ceiling is reported as a bug.
struct CeilingError : Error {
    using Error::Error;
};

/// An internal invariant failed (e.g. basic-set descent violated).
struct InternalError : Error {
    using Error::Error;
};

/// Syntax or validation failure while reading a system file.
struct ParseError : Error {
    ParseError(int line, int column, const std::string& message,
               std::vector<std::string> expectedTokens = {})
        : Error("line " + std::to_string(line) + ", col " + std::to_string(column) +
                ": " + message + renderExpected(expectedTokens)),
          line(line),
          column(column),
          message(message),
          expected(std::move(expectedTokens)) {}

    int line;
    int column;
    std::string message;
    std::vector<std::string> expected;

private:
    static std::string renderExpected(const std::vector<std::string>& ts) {
        if (ts.empty()) return {};
        std::string out = " (expected: ";
        for (std::size_t i = 0; i < ts.size(); ++i) {
            if (i) out += ", ";
            out += ts[i];
        }
        out += ")";
        return out;
    }
};

}  // namespace wuritt

#endif
