#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace acg {

/// Base of every error the library raises.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed cycle notation; `offset` is the 0-based byte offset of the fault.
class ParseError : public Error {
 public:
  ParseError(const std::string& msg, std::size_t offset)
      : Error(msg + " at offset " + std::to_string(offset)), offset_(offset) {}
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

/// Malformed group file; `line` is 1-based.
class FormatError : public Error {
 public:
  FormatError(const std::string& msg, std::size_t line)
      : Error("line " + std::to_string(line) + ": " + msg), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class DegreeMismatch : public Error {
 public:
  using Error::Error;
};

/// An operation's input does not satisfy its documented precondition
/// (element outside the group, subgroup not normal, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// The enumeration bound is smaller than the group order.
class CapacityError : public Error {
 public:
  using Error::Error;
};

/// Input is outside what the algorithm supports (e.g. chief series of a
/// nonsolvable group).
class UnsupportedError : public Error {
 public:
  using Error::Error;
};

/// A consistency check inside an algorithm failed. Always a bug.
class InternalError : public Error {
 public:
  using Error::Error;
};

/// A verified structural statement about anticentral elements failed.
/// Either an implementation bug or a counterexample; `witness` carries the
/// offending elements/subgroups in cycle notation.
class TheoremViolation : public Error {
 public:
  TheoremViolation(const std::string& claim, std::string witness)
      : Error("theorem violation: " + claim), claim_(claim), witness_(std::move(witness)) {}
  const std::string& claim() const noexcept { return claim_; }
  const std::string& witness() const noexcept { return witness_; }

 private:
  std::string claim_;
  std::string witness_;
};

}  // namespace acg
