#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace degseq {

// Base for everything thrown by the library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Input text could not be parsed; position is a 0-based byte offset.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// Sequence violates a construction invariant (empty, unsorted, out of range).
class InvalidSequenceError : public Error {
 public:
  using Error::Error;
};

// Two sequences were expected to have the same length.
class LengthMismatchError : public Error {
 public:
  using Error::Error;
};

// A vertex label or index is outside {1..n}, or labels repeat.
class IndexOutOfRangeError : public Error {
 public:
  using Error::Error;
};

// Operation requires a graphic sequence.
class NotGraphicError : public Error {
 public:
  using Error::Error;
};

// Kleitman-Wang style reduction ran out of entries to decrement.
class InsufficientEntriesError : public Error {
 public:
  using Error::Error;
};

// Monotonicity check requires the left argument to majorize the right.
class NotComparableError : public Error {
 public:
  using Error::Error;
};

// Bound evaluation requires a positive minimum degree.
class MinDegreeZeroError : public Error {
 public:
  using Error::Error;
};

// Two-switch does not apply to the given graph.
class InvalidSwitchError : public Error {
 public:
  using Error::Error;
};

// A stated operation precondition does not hold.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// Induced-subgraph style operations require a nonempty label subset.
class EmptySubsetError : public Error {
 public:
  using Error::Error;
};

// Input exceeds a hard size cap (sequence length, enumeration limit).
class TooLargeError : public Error {
 public:
  using Error::Error;
};

}  // namespace degseq
