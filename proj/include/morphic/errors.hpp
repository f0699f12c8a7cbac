#pragma once

#include <stdexcept>
#include <string>

namespace morphic {

// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An input violates an operation's precondition (letter outside the alphabet,
// non-prolongable seed, erasing morphism where a non-erasing one is required).
class DomainError : public Error {
 public:
  using Error::Error;
};

// A configured cap (materialized symbols, closure work, verification length)
// was exceeded.  Never a silent truncation.
class ResourceError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  explicit ParseError(const std::string& what) : Error(what) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_ = 0;
};

// More than one desubstitution candidate survived verification at the cap.
class AmbiguityError : public Error {
 public:
  using Error::Error;
};

// A step that must succeed for inputs satisfying the preconditions did not;
// points at a bug upstream of the failing call.
class InconsistencyError : public Error {
 public:
  using Error::Error;
};

// A constructed representation disagrees with the factor oracle.
class VerificationError : public Error {
 public:
  using Error::Error;
};

}  // namespace morphic
