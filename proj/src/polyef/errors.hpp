#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace polyef {

/// Base class for every error raised by the core library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class DimensionError : public Error {
public:
  using Error::Error;
};

class ArithmeticError : public Error {
public:
  using Error::Error;
};

class ArgumentError : public Error {
public:
  using Error::Error;
};

/// Raised when an operation requires a nonempty polyhedron.
class EmptyPolyhedronError : public Error {
public:
  using Error::Error;
};

/// LP-backed operation hit an infeasible or unbounded subproblem it cannot
/// report as a verdict.
class OptimizationError : public Error {
public:
  using Error::Error;
};

class IoError : public Error {
public:
  using Error::Error;
};

class ParseError : public Error {
public:
  explicit ParseError(const std::string& what, std::size_t line = 0)
      : Error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
  std::size_t line() const { return line_; }

private:
  std::size_t line_;
};

} // namespace polyef
