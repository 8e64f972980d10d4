#pragma once

#include <stdexcept>
#include <string>

namespace postlie {

/// Malformed or mathematically invalid input (bad file, Jacobi failure,
/// dimension mismatch). The CLI maps it to exit code 2.
class InputError : public std::invalid_argument {
 public:
  explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace postlie
