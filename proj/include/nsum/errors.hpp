#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace nsum {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// +inf + -inf. Never produced by the subtree recursion on a finite tree.
class IndeterminateSum : public Error {
 public:
  IndeterminateSum() : Error("indeterminate sum: +inf + -inf") {}
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Self-loop or repeated edge.
class NonSimpleError : public Error {
 public:
  using Error::Error;
};

class NotATreeError : public Error {
 public:
  using Error::Error;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A constructed witness failed exact verification. Indicates a bug.
class WitnessVerificationError : public Error {
 public:
  using Error::Error;
};

class InvalidSpec : public Error {
 public:
  using Error::Error;
};

/// Some expanded vertex of an infinite tree has only leaf children.
class HypothesisViolation : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace nsum
