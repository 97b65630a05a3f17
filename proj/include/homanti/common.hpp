// Shared error types for the homanti kernel.
//
// InputError: malformed or structurally invalid user input (bad file, shape
//   mismatch, violated symmetry invariant, unmet operation precondition).
//   The CLI maps it to exit code 2.
// InternalError: a broken internal invariant; never expected on valid input.
#pragma once

#include <stdexcept>
#include <string>

namespace homanti {

class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

class InternalError : public std::logic_error {
 public:
  explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace homanti
