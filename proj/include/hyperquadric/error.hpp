#pragma once

#include <stdexcept>
#include <string>

namespace hq {

// Base for all library-thrown conditions. Callers that only want "did it
// work" can catch this one type.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Operand shapes or signatures do not line up.
class DimensionError : public Error {
public:
    explicit DimensionError(const std::string& msg) : Error(msg) {}
};

// A basis that was supposed to be independent is not, or a rank
// precondition failed.
class RankError : public Error {
public:
    explicit RankError(const std::string& msg) : Error(msg) {}
};

// Division by zero, zero divisor polynomial, or an operation on the zero
// vector/point where a nonzero one is required.
class InvalidOperandError : public Error {
public:
    explicit InvalidOperandError(const std::string& msg) : Error(msg) {}
};

// A projective operation hit its indeterminacy locus (e.g. projecting a map
// whose image lies entirely in the discarded factor).
class IndeterminacyError : public Error {
public:
    explicit IndeterminacyError(const std::string& msg) : Error(msg) {}
};

// The requested operation is not defined for this signature (e.g. the
// quadric divisibility test on a rank-1 form).
class UnsupportedSignatureError : public Error {
public:
    explicit UnsupportedSignatureError(const std::string& msg) : Error(msg) {}
};

// Text input rejected by the polynomial/descriptor grammar.
class ParseError : public Error {
public:
    ParseError(const std::string& msg, int line, int column)
        : Error(msg + " (line " + std::to_string(line) + ", column " +
                std::to_string(column) + ")"),
          line_(line),
          column_(column) {}

    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

}  // namespace hq
