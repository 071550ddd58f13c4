#pragma once

#include <functional>

#include "xychain/errors.hpp"

namespace xychain {

struct QuadResult {
  double value = 0.0;
  double error_estimate = 0.0;
  long evaluations = 0;
};

inline constexpr double kDefaultAbsTol = 1e-10;
inline constexpr long kDefaultEvalBudget = 200000;

// Adaptive Gauss-Kronrod (G7-K15) integration of f over [0, pi].  The rule is
// open: no node is ever placed at phi = 0 or phi = pi, so integrands with
// removable 0/0 endpoint singularities are handled without special-casing.
// osc_scale hints at the number of oscillations across the interval (callers
// pass 2t for integrands containing cos(2 Lambda(0) t)); the initial
// subdivision uses max(8, ceil(osc_scale)) panels.  Throws NonConvergence if
// the error estimate still exceeds abs_tol once the evaluation budget is
// exhausted.
QuadResult integrate(const std::function<double(double)>& f,
                     double abs_tol = kDefaultAbsTol, double osc_scale = 0.0,
                     long eval_budget = kDefaultEvalBudget);

}  // namespace xychain
