#pragma once

#include <stdexcept>
#include <string>

namespace pcube {

// Base for every rejection raised by the library. A rejection is distinct
// from a negative verdict: predicates return false, malformed requests throw.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed graph input (self-loop, vertex out of range, too many vertices).
class InvalidGraph : public Error {
 public:
  using Error::Error;
};

// A documented precondition of an operation does not hold.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// Request exceeds a documented scale wall (n > 10 brute force, d > 4, ...).
class ScaleError : public Error {
 public:
  using Error::Error;
};

// Text input could not be parsed; carries the 1-based line number.
class ParseError : public Error {
 public:
  ParseError(int line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const noexcept { return line_; }

 private:
  int line_;
};

}  // namespace pcube
