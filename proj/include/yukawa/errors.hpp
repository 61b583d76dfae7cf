#pragma once

#include <stdexcept>
#include <string>

namespace yukawa {

/// Input violates a physical invariant, or a radicand / Pochhammer factor
/// makes the requested quantity undefined.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Adaptive quadrature did not reach the requested tolerance.
class QuadratureError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Sturm bisection bracket stopped shrinking (usually NaN in the matrix).
class IterationLimit : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Inverse iteration met an exactly singular shifted system twice.
class SingularShift : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace yukawa
