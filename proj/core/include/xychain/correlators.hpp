#pragma once

#include "xychain/model.hpp"
#include "xychain/quadrature.hpp"

namespace xychain {

// Magnetization and the nearest-neighbor correlators of the evolved state.
// All quantities are real: the only imaginary object in the closed formulas
// is S(R,t) = i*sigma, and it enters either divided by i (t_xy) or through
// S(1,t)S(-1,t) = sigma^2 (t_zz), so no complex arithmetic appears here.
struct CorrelatorSet {
  double m_z = 0.0;      // transverse magnetization, in [-1/2, 1/2]
  double g_plus = 0.0;   // G(+1, t)
  double g_minus = 0.0;  // G(-1, t)
  double sigma = 0.0;    // sigma(1, t) = S(1, t)/i
  double t_xx = 0.0;
  double t_yy = 0.0;
  double t_zz = 0.0;
  double t_xy = 0.0;
};

// Assembly of the two-site correlators from the raw integrals.
inline CorrelatorSet assemble(double m_z, double g_plus, double g_minus,
                              double sigma) {
  CorrelatorSet c;
  c.m_z = m_z;
  c.g_plus = g_plus;
  c.g_minus = g_minus;
  c.sigma = sigma;
  c.t_xy = sigma;
  c.t_xx = -g_minus;
  c.t_yy = -g_plus;
  c.t_zz = 4.0 * m_z * m_z - g_plus * g_minus + sigma * sigma;
  return c;
}

double magnetization(const ModelParams& params,
                     double abs_tol = kDefaultAbsTol,
                     long eval_budget = kDefaultEvalBudget);

double g_correlator(const ModelParams& params, int R,
                    double abs_tol = kDefaultAbsTol,
                    long eval_budget = kDefaultEvalBudget);

double s_correlator(const ModelParams& params,
                    double abs_tol = kDefaultAbsTol,
                    long eval_budget = kDefaultEvalBudget);

// Evaluates all four independent integrals and assembles the T's.  A
// NonConvergence from any of them is rethrown with the failing integral named
// in the message.
CorrelatorSet correlator_set(const ModelParams& params,
                             double abs_tol = kDefaultAbsTol,
                             long eval_budget = kDefaultEvalBudget);

}  // namespace xychain
