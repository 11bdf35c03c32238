#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace topo {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input violates an operation's precondition.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// Malformed structure: dangling ids, mismatched matrix shapes.
class StructuralError : public Error {
 public:
  using Error::Error;
};

/// A file could not be read.
class IoError : public Error {
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

/// A 2-complex that is not a compact surface; the message names the offending simplex.
class NotASurface : public Error {
 public:
  using Error::Error;
};

/// Loop sampling too coarse or hitting a zero vector.
class SamplingError : public Error {
 public:
  SamplingError(std::size_t step, const std::string& what)
      : Error(what + " (step " + std::to_string(step) + ")"), step_(step) {}

  std::size_t step() const noexcept { return step_; }

 private:
  std::size_t step_;
};

/// Raised by CheckedInt64 when a result does not fit in 64 bits.
class OverflowError : public Error {
 public:
  OverflowError() : Error("64-bit integer overflow") {}
};

}  // namespace topo
