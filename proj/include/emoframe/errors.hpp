#ifndef EMOFRAME_ERRORS_HPP
#define EMOFRAME_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace emoframe {

/// Base class for all domain errors. `code` is a stable module-qualified
/// identifier such as "rdf_core/syntax", suitable for diagnostics.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& message)
        : std::runtime_error(code + ": " + message), code_(std::move(code)) {}

    const std::string& code() const { return code_; }

private:
    std::string code_;
};

/// Syntax error with source position (1-based line/column).
class SyntaxError : public Error {
public:
    SyntaxError(std::string code, unsigned line, unsigned column, const std::string& message)
        : Error(std::move(code),
                "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
          line_(line), column_(column) {}

    unsigned line() const { return line_; }
    unsigned column() const { return column_; }

private:
    unsigned line_;
    unsigned column_;
};

} // namespace emoframe

#endif
