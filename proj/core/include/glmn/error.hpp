#pragma once

#include <stdexcept>
#include <string>

namespace glmn {

/// Bad input: wrong rank, malformed text, a box outside the rectangle, etc.
class UsageError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// A structural property that must hold was observed to fail (colour
/// conflict after contraction, non-integral Weyl vector, ...). Seeing one of
/// these means either a bug here or a counterexample to the theory.
class InvariantViolation : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

} // namespace glmn
