#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace anick {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
public:
    DivisionByZero() : Error("division by zero") {}
};

class FieldMismatch : public Error {
public:
    using Error::Error;
};

/* Evaluating a rational function where its denominator vanishes. */
class PoleError : public Error {
public:
    PoleError(const std::string& parameter, const std::string& value)
        : Error("pole: denominator vanishes at " + parameter + " = " + value), parameter_(parameter), value_(value)
    {
    }
    const std::string& parameter() const { return parameter_; }
    const std::string& value() const { return value_; }

private:
    std::string parameter_;
    std::string value_;
};

class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t line, std::size_t column)
        : Error(what + " (line " + std::to_string(line) + ", column " + std::to_string(column) + ")"), message_(what), line_(line), column_(column)
    {
    }
    const std::string& message() const { return message_; }
    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

private:
    std::string message_;
    std::size_t line_;
    std::size_t column_;
};

/* A configured cap is too small for the requested computation. */
class LimitError : public Error {
public:
    using Error::Error;
};

/* An invariant that must hold by construction was violated. */
class InternalError : public Error {
public:
    using Error::Error;
};

}  // namespace anick
