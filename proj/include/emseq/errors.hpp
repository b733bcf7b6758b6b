#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace emseq {

// Malformed or out-of-contract data: negative counts, empty documents,
// duplicate ids, unknown measures. Maps to CLI exit code 2.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A requested year lies outside a matrix's citing-year span.
class RangeError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

// Syntax error in an input document. Line and column are 1-based; column is
// a byte offset for JSON and a field index for CSV.
class ParseError : public InvalidInput {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column)
      : InvalidInput(message + " (line " + std::to_string(line) + ", column " +
                     std::to_string(column) + ")"),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

// Unreadable source or unwritable sink. Maps to CLI exit code 1.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace emseq
