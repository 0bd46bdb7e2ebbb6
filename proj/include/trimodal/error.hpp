#pragma once

#include <stdexcept>
#include <string>

namespace trimodal {

/// A per-cavity product whose cross terms leave the requested manifold.
class UnsupportedProduct : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when a numerical precondition (Hermiticity, orthonormality) fails.
class NumericalContractError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace trimodal
