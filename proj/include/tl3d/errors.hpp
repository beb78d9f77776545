#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tl3d {

// Malformed textual input (bracket strings, labels, rationals, JSON payloads).
// `position` is 1-based where a position makes sense, 0 otherwise.
class ParseError : public std::runtime_error {
public:
  ParseError(const std::string& msg, std::size_t position = 0)
      : std::runtime_error(msg), position_(position) {}
  std::size_t position() const noexcept { return position_; }

private:
  std::size_t position_;
};

// Composition attempted across two different objects.
class ObjectMismatch : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// An always-on internal consistency assertion failed.  These guard scalar
// bookkeeping (g, b non-negative, Euler additivity) and closure of
// admissibility under composition; a throw is a reportable finding.
class CheckViolation : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

// A Gram entry whose through-part is full but not the identity.  The scalar
// convention is undefined there, so the entry is flagged instead of guessed.
class FlaggedEntry : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

}  // namespace tl3d
