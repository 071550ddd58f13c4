#include "xychain/correlators.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace xychain {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Shared thermal/dispersion kernel W(phi) = tanh(beta Lambda_a / 2) /
// (Lambda_a Lambda_0^2).  The apparent 0/0 at phi -> 0 when a = 1, beta = inf
// is removable and never sampled: the quadrature rule is open.
double kernel_w(const ModelParams& p, double phi) {
  const double la = dispersion(p.field_a, p.gamma, phi);
  const double l0 = dispersion(0.0, p.gamma, phi);
  return thermal_weight(p.temperature, la) / (la * l0 * l0);
}

}  // namespace

double magnetization(const ModelParams& params, double abs_tol,
                     long eval_budget) {
  params.validate();
  const double g = params.gamma;
  const double a = params.field_a;
  const double t = params.time_t;
  auto integrand = [&](double phi) {
    const double c = std::cos(phi);
    const double s = std::sin(phi);
    const double l0 = dispersion(0.0, g, phi);
    return kernel_w(params, phi) *
           (std::cos(2.0 * l0 * t) * g * g * a * s * s -
            c * ((c - a) * c + g * g * s * s));
  };
  return integrate(integrand, abs_tol, 2.0 * t, eval_budget).value / kTwoPi;
}

double g_correlator(const ModelParams& params, int R, double abs_tol,
                    long eval_budget) {
  params.validate();
  if (R != 1 && R != -1) throw DomainError("g_correlator: R must be +1 or -1");
  const double g = params.gamma;
  const double a = params.field_a;
  const double t = params.time_t;
  const double pi = std::numbers::pi;
  auto integrand = [&](double phi) {
    const double c = std::cos(phi);
    const double s = std::sin(phi);
    const double l0 = dispersion(0.0, g, phi);
    const double w = kernel_w(params, phi);
    const double cos2 = std::cos(2.0 * l0 * t);
    const double odd = std::sin(phi * R) * s * w *
                       (g * g * s * s + (c - a) * c + a * c * cos2);
    const double even = std::cos(phi * R) * w *
                        ((g * g * s * s + (c - a) * c) * c -
                         a * g * g * s * s * cos2);
    return (g / pi) * odd - (1.0 / pi) * even;
  };
  // Overall sign pinned against the finite-chain oracle so that
  // T^xx = -G(-1) and T^yy = -G(+1) hold for the Hamiltonian as written
  // (the staggered-fermion gauge used in deriving the integrand flips it).
  return -integrate(integrand, abs_tol, 2.0 * t, eval_budget).value;
}

double s_correlator(const ModelParams& params, double abs_tol,
                    long eval_budget) {
  params.validate();
  const double g = params.gamma;
  const double a = params.field_a;
  const double t = params.time_t;
  const double pi = std::numbers::pi;
  auto integrand = [&](double phi) {
    const double s = std::sin(phi);
    const double la = dispersion(a, g, phi);
    const double l0 = dispersion(0.0, g, phi);
    return s * s * std::sin(2.0 * t * l0) *
           thermal_weight(params.temperature, la) / (la * l0);
  };
  // Same sign convention as g_correlator; thermal weight included so that
  // the beta -> 0 limit vanishes like every other correlator.
  return -(g * a / pi) *
         integrate(integrand, abs_tol, 2.0 * t, eval_budget).value;
}

CorrelatorSet correlator_set(const ModelParams& params, double abs_tol,
                             long eval_budget) {
  params.validate();
  auto tagged = [&](const char* name, auto&& fn) -> double {
    try {
      return fn();
    } catch (const NonConvergence& e) {
      throw NonConvergence(std::string(name) + ": " + e.what(), e.value,
                           e.error_estimate, e.evaluations);
    }
  };
  const double m_z = tagged("magnetization", [&] {
    return magnetization(params, abs_tol, eval_budget);
  });
  const double g_plus = tagged("g_correlator(+1)", [&] {
    return g_correlator(params, 1, abs_tol, eval_budget);
  });
  const double g_minus = tagged("g_correlator(-1)", [&] {
    return g_correlator(params, -1, abs_tol, eval_budget);
  });
  const double sigma = tagged("s_correlator", [&] {
    return s_correlator(params, abs_tol, eval_budget);
  });
  return assemble(m_z, g_plus, g_minus, sigma);
}

}  // namespace xychain
