#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace toughlab {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed graph6 (or family spec) text. offset is the byte position of the
// first offending character.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : Error(what + " (at byte " + std::to_string(offset) + ")"), offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

class ArgumentError : public Error {
 public:
  using Error::Error;
};

// An operation was called on an input outside its documented domain.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

class OverflowError : public Error {
 public:
  using Error::Error;
};

}  // namespace toughlab
