#pragma once

#include <stdexcept>
#include <string>

namespace qgc {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands disagree in length or modulus.
class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// A result would exceed the configured element cap.
class CapacityError : public Error {
 public:
  using Error::Error;
};

/// Malformed graph file. `line()` is 1-based, 0 when not tied to a line.
class ParseError : public Error {
 public:
  enum class Kind { kHeader, kRow, kAsymmetric, kDiagonal, kRange };

  ParseError(Kind kind, int line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), kind_(kind), line_(line) {}

  Kind kind() const noexcept { return kind_; }
  int line() const noexcept { return line_; }

 private:
  Kind kind_;
  int line_;
};

/// The requested distance exceeds the diagonal distance of the graph, so
/// any code would be degenerate and the nondegenerate search refuses it.
class DegenerateRegime : public Error {
 public:
  DegenerateRegime(int delta, int diagonal_distance)
      : Error("delta " + std::to_string(delta) + " exceeds diagonal distance " +
              std::to_string(diagonal_distance)),
        delta_(delta),
        diagonal_distance_(diagonal_distance) {}

  int delta() const noexcept { return delta_; }
  int diagonal_distance() const noexcept { return diagonal_distance_; }

 private:
  int delta_;
  int diagonal_distance_;
};

/// A construction's preconditions do not hold.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

class NotStabilizerCode : public Error {
 public:
  using Error::Error;
};

}  // namespace qgc
