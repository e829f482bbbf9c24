// Exception types shared across the library.
#pragma once

#include <stdexcept>

namespace robustopt {

/// Operand shapes do not agree.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A smooth-only quantity (gradient, Hessian) was requested at a point where
/// the robust loss is not differentiable. Use the subdifferential API there.
class NonSmoothPointError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// An iterative routine hit its iteration cap without meeting its tolerance.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Training loss blew up; the step size is too large.
class DivergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace robustopt
