#pragma once

#include <stdexcept>
#include <string>

namespace dfs {

/// Base class for all df-spectra errors.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Precondition violation on user-supplied values.
class InvalidInput : public Error {
public:
  using Error::Error;
};

/// Gamma function evaluated at a non-positive integer.
class PoleError : public Error {
public:
  using Error::Error;
};

/// The closed form has no bound state for the requested quantum numbers.
class NoBoundState : public Error {
public:
  enum class Reason { Discriminant, QuantizationRootNegative };

  NoBoundState(Reason reason, const std::string& what)
      : Error(what), reason_(reason) {}

  Reason reason() const { return reason_; }

private:
  Reason reason_;
};

/// File could not be opened or read.
class IoError : public Error {
public:
  using Error::Error;
};

/// Malformed text input; carries the 1-based line number.
class ParseError : public Error {
public:
  ParseError(int line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  int line() const { return line_; }

private:
  int line_;
};

/// A numeric procedure produced a non-finite or unusable result.
class NumericalError : public Error {
public:
  using Error::Error;
};

/// An iterative expansion failed to settle within its term cap.
class ConvergenceError : public Error {
public:
  using Error::Error;
};

}  // namespace dfs
