#pragma once

#include <stdexcept>
#include <string>

namespace conjzoo {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Caller misuse: mismatched levels, unknown names, out-of-range indices.
class UsageError : public Error {
 public:
  using Error::Error;
};

/// Input outside the mathematical domain of an operation (zero inverse, non-projector, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& message, int line, int column)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

class NotADoubleCandidate : public Error {
 public:
  using Error::Error;
};

class NotPoincareDuality : public Error {
 public:
  using Error::Error;
};

class NotAllRelatorsSquare : public Error {
 public:
  using Error::Error;
};

}  // namespace conjzoo
