#ifndef SPBW_ERROR_HPP
#define SPBW_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace spbw {

// Base of all engine errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Operands live over different rings / presentations, or arities disagree.
class StructuralError : public Error {
public:
    using Error::Error;
};

// A documented precondition of an operation was violated by the caller.
class PreconditionError : public Error {
public:
    using Error::Error;
};

// The operation is not available for this presentation or coefficient shape.
class UnsupportedError : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(std::size_t line, std::size_t column, const std::string& message)
        : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
          line_(line),
          column_(column),
          detail_(message) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }
    /// The message without the position prefix.
    const std::string& detail() const noexcept { return detail_; }

private:
    std::size_t line_;
    std::size_t column_;
    std::string detail_;
};

}  // namespace spbw

#endif  // SPBW_ERROR_HPP
