#pragma once

#include <stdexcept>
#include <string>

namespace pcp {

// Bad user input: malformed files, out-of-range ids, unsupported color counts,
// instances beyond an oracle's size bound. Maps to CLI exit code 2.
class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

// A defensive internal check failed; indicates a bug, not bad input.
// Maps to CLI exit code 3.
class InvariantViolation : public std::logic_error {
 public:
  explicit InvariantViolation(const std::string& what) : std::logic_error(what) {}
};

}  // namespace pcp
