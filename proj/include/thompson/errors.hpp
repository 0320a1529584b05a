#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace thompson {

// Raised on malformed textual input (words, trees, diagrams, dyadics).
struct ParseError : std::runtime_error {
  std::size_t position;
  ParseError(const std::string& what, std::size_t pos)
      : std::runtime_error(what + " (at position " + std::to_string(pos) + ")"),
        position(pos) {}
};

// Raised when a diagram violates a structural invariant (leaf-count
// mismatch, pointer out of range, non-canonical input to a group op).
struct StructuralError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Raised when a search exceeds its configured element or time budget.
// Searches never return a wrong answer; they abort with this instead.
struct ResourceLimitError : std::runtime_error {
  std::size_t explored;
  ResourceLimitError(const std::string& what, std::size_t n)
      : std::runtime_error(what), explored(n) {}
};

}  // namespace thompson
