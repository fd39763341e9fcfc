#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace algqe {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& what)
      : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

// A symbol that exists in the grammar but not in the selected language,
// e.g. conj(...) in a formula over the base field.
class UnknownSymbolError : public ParseError {
 public:
  using ParseError::ParseError;
};

class SizeLimitExceeded : public std::runtime_error {
 public:
  SizeLimitExceeded(const std::string& what, std::size_t count, std::size_t limit)
      : std::runtime_error(what + " count " + std::to_string(count) + " exceeds limit " +
                           std::to_string(limit)),
        count_(count),
        limit_(limit) {}
  std::size_t count() const { return count_; }
  std::size_t limit() const { return limit_; }

 private:
  std::size_t count_;
  std::size_t limit_;
};

class NotApplicable : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace algqe
