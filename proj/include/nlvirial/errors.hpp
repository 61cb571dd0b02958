#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace nlvirial {

/// Caller supplied arguments outside an operation's domain.
class precondition_error : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// A computation ran but could not produce a trustworthy number.
class numerical_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// The force violates the odd / restoring restriction (x f(x) > 0).
class model_restriction_error : public numerical_error {
public:
  using numerical_error::numerical_error;
};

/// A root or extremum that was asked for does not exist.
class no_solution_error : public numerical_error {
public:
  using numerical_error::numerical_error;
};

class integration_error : public numerical_error {
public:
  integration_error(const std::string& what, std::size_t step)
      : numerical_error(what + " (step " + std::to_string(step) + ")"), step_(step) {}

  std::size_t step() const noexcept { return step_; }

private:
  std::size_t step_;
};

}  // namespace nlvirial
