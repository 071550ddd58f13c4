#pragma once

#include <stdexcept>
#include <string>

namespace xychain {

// Invalid physical parameter or argument outside an operation's domain.
struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Quadrature failed to reach the requested tolerance within the budget.
struct NonConvergence : std::runtime_error {
  NonConvergence(const std::string& msg, double value, double error_estimate,
                 long evaluations)
      : std::runtime_error(msg),
        value(value),
        error_estimate(error_estimate),
        evaluations(evaluations) {}
  double value;
  double error_estimate;
  long evaluations;
};

// A density matrix violated trace/positivity requirements.
struct PhysicalityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NotHermitian : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct BadSize : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DimensionMismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct TooLarge : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ValidationFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NoTransitionFound : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InsufficientData : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace xychain
