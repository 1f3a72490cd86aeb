#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace stanley {

// Operands live in different ring contexts.
class RingMismatch : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

// Input outside an operation's domain (zero or unit ideal where a proper
// nonzero ideal is required, I not contained in J, ...).
class DomainError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

// A configured cap (poset points, component count, time budget) was hit.
class ResourceError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// An exponent exceeded the ring's exponent cap.
class ExponentCapError : public std::out_of_range {
public:
  using std::out_of_range::out_of_range;
};

class ParseError : public std::runtime_error {
public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

private:
  std::size_t position_;
};

}  // namespace stanley
