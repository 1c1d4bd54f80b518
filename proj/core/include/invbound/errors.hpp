#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace invbound {

// Malformed text input (cycle notation, polynomial text, catalog records).
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " (at position " + std::to_string(position) + ")"),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

// An operation was called outside its mathematical domain.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Group closure grew past the configured element cap.
class CapacityError : public std::length_error {
 public:
  using std::length_error::length_error;
};

// A truncated series is too short for the requested computation.
class PrecisionError : public std::runtime_error {
 public:
  PrecisionError(const std::string& what, int required)
      : std::runtime_error(what), required_(required) {}

  int required() const noexcept { return required_; }

 private:
  int required_;
};

// A step or wall-clock budget ran out. Not a mathematical failure.
class BudgetExhausted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Results that contradict each other (a verified primary set whose Hilbert
// numerator is rejected, for example).
class InternalInconsistency : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace invbound
