#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hiccup {

// Base of every error thrown by the library. The CLI maps IdentityViolation
// to exit code 1 and everything else to exit code 2.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Invalid invocation: zero term counts, missing arguments.
class UsageError : public Error {
 public:
  using Error::Error;
};

// Arguments outside the mathematical domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Index or bound outside the range where an answer is defined.
class RangeError : public Error {
 public:
  using Error::Error;
};

class ArithmeticError : public Error {
 public:
  using Error::Error;
};

// A stated identity failed on concrete data.
class IdentityViolation : public Error {
 public:
  using Error::Error;
};

// A search (period, recurrence start) found nothing within the horizon.
class NotFound : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace hiccup
