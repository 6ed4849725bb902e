#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace orturan {

enum class ErrorKind {
    LoopArc,
    AntiparallelViolation,
    ParseError,
    InvariantViolation,
    TooLarge,
    EmptyPattern,
    BudgetExceeded,
    BadParams,
    NoFormula,
    AttemptsExhausted,
    TooSmall,
    CertificateInsufficient,
    RetriesExhausted,
    InfeasibleConfig,
    InvalidArgument,
};

const char* to_string(ErrorKind kind);

// Every library failure is reported through this type (or a subclass carrying
// extra payload); callers switch on kind().
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind)
    {
    }

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

class ParseError : public Error {
public:
    ParseError(std::size_t line, std::size_t column, const std::string& message)
        : Error(ErrorKind::ParseError,
                "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
          line_(line), column_(column)
    {
    }

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

} // namespace orturan
