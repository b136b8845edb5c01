#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace leibniz {

/// Malformed or out-of-contract input (bad JSON, wrong sizes, invalid sequences).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A mathematical precondition does not hold (non-ideal, non-nilpotent operator, ...).
class MathError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A computation would exceed a configured resource guard.
class GuardError : public std::runtime_error {
 public:
  GuardError(const std::string& what, std::uint64_t estimated_cells)
      : std::runtime_error(what), estimated_cells_(estimated_cells) {}

  std::uint64_t estimated_cells() const noexcept { return estimated_cells_; }

 private:
  std::uint64_t estimated_cells_;
};

}  // namespace leibniz
