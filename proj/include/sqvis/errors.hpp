#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sqvis {

// Segments are collinear with a shared stretch, or one has zero length;
// the proper-crossing predicate cannot classify such a pair.
class DegenerateCrossing : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A ranking is not a permutation of the instance's indices.
class InvalidRanking : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An exhaustive enumeration was requested above its size cap.
class TooLarge : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Generator parameters violate a construction constraint.
class BadParams : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input text; carries the 1-based physical line number.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& reason)
      : std::runtime_error("line " + std::to_string(line) + ": " + reason),
        line_(line),
        reason_(reason) {}

  std::size_t line() const { return line_; }
  const std::string& reason() const { return reason_; }

 private:
  std::size_t line_;
  std::string reason_;
};

}  // namespace sqvis
