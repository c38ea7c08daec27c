#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace essence {

struct SourceLoc {
    int line = 0;
    int column = 0;
};

// Raised by the tokenizer and parser. Line/column are 1-based positions into
// the source text; `expected` lists the token descriptions that would have
// been accepted at the point of failure.
class ParseError : public std::runtime_error {
public:
    ParseError(std::string message, int line, int column,
               std::vector<std::string> expected = {})
        : std::runtime_error(format(message, line, column, expected)),
          message_(std::move(message)),
          line_(line),
          column_(column),
          expected_(std::move(expected)) {}

    const std::string& message() const { return message_; }
    int line() const { return line_; }
    int column() const { return column_; }
    const std::vector<std::string>& expected() const { return expected_; }

private:
    static std::string format(const std::string& message, int line, int column,
                              const std::vector<std::string>& expected) {
        std::string out = "parse error at " + std::to_string(line) + ":" +
                          std::to_string(column) + ": " + message;
        if (!expected.empty()) {
            out += " (expected ";
            for (size_t i = 0; i < expected.size(); ++i) {
                if (i > 0) out += ", ";
                out += expected[i];
            }
            out += ")";
        }
        return out;
    }

    std::string message_;
    int line_;
    int column_;
    std::vector<std::string> expected_;
};

class TypeError : public std::runtime_error {
public:
    TypeError(std::string message, SourceLoc loc = {})
        : std::runtime_error(format(message, loc)),
          message_(std::move(message)),
          loc_(loc) {}

    const std::string& message() const { return message_; }
    SourceLoc loc() const { return loc_; }

private:
    static std::string format(const std::string& message, SourceLoc loc) {
        if (loc.line == 0) return "type error: " + message;
        return "type error at " + std::to_string(loc.line) + ":" +
               std::to_string(loc.column) + ": " + message;
    }

    std::string message_;
    SourceLoc loc_;
};

enum class EvalErrorKind {
    DivisionByZero,
    UndefinedApplication,
    NegativeExponent,
    Overflow,
    BadIndex,
    NotAParticipant,
    ArityMismatch,
};

const char* to_string(EvalErrorKind kind);

struct EvalError {
    EvalErrorKind kind;
    std::string message;
};

class EvalException : public std::runtime_error {
public:
    explicit EvalException(EvalError err)
        : std::runtime_error(std::string("evaluation error (") +
                             to_string(err.kind) + "): " + err.message),
          err_(std::move(err)) {}

    const EvalError& error() const { return err_; }

private:
    EvalError err_;
};

// Instantiation problems: missing/extra parameters, violated where clauses,
// infinite find domains.
class InstantiationError : public std::runtime_error {
public:
    explicit InstantiationError(const std::string& message)
        : std::runtime_error("instantiation error: " + message) {}
};

}  // namespace essence
