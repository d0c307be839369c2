#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lexirank {

// Base of every error thrown by the library. The CLI maps subclasses onto
// exit codes: DomainError -> 1, everything input-related -> 2.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Value outside the domain of an operation (bad label, degenerate sample, ...).
// `line` is the 1-based input line when the value came from a file, else 0.
class DomainError : public Error {
public:
    explicit DomainError(const std::string& what, std::size_t line = 0)
        : Error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t line)
        : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

class EncodingError : public Error {
public:
    explicit EncodingError(const std::string& what, std::size_t line = 0)
        : Error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

class IoError : public Error {
public:
    using Error::Error;
};

}  // namespace lexirank
