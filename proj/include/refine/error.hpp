#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace refine {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A semantic error: alphabet mismatch, unknown state, invalid argument.
class SemanticError : public Error {
 public:
  using Error::Error;
};

/// Raised by the text parsers. Line and column are 1-based.
class ParseError : public Error {
 public:
  ParseError(std::string source, std::size_t line, std::size_t column, const std::string& message)
      : Error(source + ":" + std::to_string(line) + ":" + std::to_string(column) + ": " + message),
        source_(std::move(source)),
        line_(line),
        column_(column) {}

  const std::string& source() const noexcept { return source_; }
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::string source_;
  std::size_t line_;
  std::size_t column_;
};

}  // namespace refine
