#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lcg {

// Base class for all engine errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// An enumeration would exceed the configured group-order cap.  The engine
// refuses instead of truncating.
class CapExceededError : public Error {
 public:
  CapExceededError(const std::string& what, std::size_t cap) : Error(what), cap_(cap) {}
  std::size_t cap() const { return cap_; }

 private:
  std::size_t cap_;
};

// A subgroup-lattice computation was requested for a group above the lattice cap.
class LatticeCapExceededError : public Error {
 public:
  LatticeCapExceededError(const std::string& what, std::size_t cap) : Error(what), cap_(cap) {}
  std::size_t cap() const { return cap_; }

 private:
  std::size_t cap_;
};

// Invalid input: degree mismatch, element not in the group, subgroup of a
// different parent, out-of-range constructor parameter, and the like.
class InvalidArgumentError : public Error {
 public:
  explicit InvalidArgumentError(const std::string& what) : Error(what) {}
};

// Text that could not be parsed.  line is 1-based (0 when unknown); column is
// a 0-based offset into the line (or into the whole string for one-line input).
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : Error(what), line_(line), column_(column) {}
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

// A cross-checked mathematical invariant failed at runtime.  These guard the
// places where two independent computation routes must agree; a throw here
// means an engine bug, not bad input.
class InvariantViolationError : public Error {
 public:
  explicit InvariantViolationError(const std::string& what) : Error(what) {}
};

}  // namespace lcg
