#include <doctest.h>

#include <cmath>
#include <numbers>
#include <string>

#include "xychain/correlators.hpp"

using namespace xychain;

namespace {

ModelParams params(double gamma, double a, double t, bool zero_temp = true,
                   double beta = 1.0) {
  ModelParams p;
  p.gamma = gamma;
  p.field_a = a;
  p.time_t = t;
  p.temperature =
      zero_temp ? Temperature::zero() : Temperature::finite(beta);
  return p;
}

}  // namespace

TEST_CASE("frozen reference values at (gamma=0.5, a=0.5, t=1, zero T)") {
  // Values pinned against the N=2048 free-fermion oracle (finite-size error
  // below 1e-9 at t=1) and a high-order independent integration.
  const CorrelatorSet c = correlator_set(params(0.5, 0.5, 1.0));
  CHECK(c.m_z == doctest::Approx(0.066134595734).epsilon(1e-9));
  CHECK(c.g_plus == doctest::Approx(0.211106973719).epsilon(1e-9));
  CHECK(c.g_minus == doctest::Approx(0.856735350885).epsilon(1e-9));
  CHECK(c.sigma == doctest::Approx(-0.280022102889).epsilon(1e-9));
  CHECK(c.t_xx == doctest::Approx(-0.856735350885).epsilon(1e-9));
  CHECK(c.t_yy == doctest::Approx(-0.211106973719).epsilon(1e-9));
  CHECK(c.t_xy == doctest::Approx(-0.280022102889).epsilon(1e-9));
  CHECK(c.t_zz == doctest::Approx(-0.084955290085).epsilon(1e-9));
}

TEST_CASE("frozen reference values at (gamma=0.5, a=0.78, t=1, zero T)") {
  const CorrelatorSet c = correlator_set(params(0.5, 0.78, 1.0));
  CHECK(c.m_z == doctest::Approx(0.134046672453).epsilon(1e-9));
  CHECK(c.g_plus == doctest::Approx(0.218712508433).epsilon(1e-9));
  CHECK(c.g_minus == doctest::Approx(0.679959492311).epsilon(1e-9));
  CHECK(c.sigma == doctest::Approx(-0.386159925030).epsilon(1e-9));
  CHECK(c.t_zz == doctest::Approx(0.072277883086).epsilon(1e-9));
}

TEST_CASE("beta -> 0 kills every correlator") {
  const CorrelatorSet c =
      correlator_set(params(0.5, 0.5, 1.0, false, 1e-6));
  CHECK(std::abs(c.m_z) < 1e-6);
  CHECK(std::abs(c.g_plus) < 1e-6);
  CHECK(std::abs(c.g_minus) < 1e-6);
  CHECK(std::abs(c.sigma) < 1e-6);

  // The approach is linear in beta.
  const CorrelatorSet c2 =
      correlator_set(params(0.5, 0.5, 1.0, false, 2e-6));
  CHECK(c2.m_z == doctest::Approx(2.0 * c.m_z).epsilon(1e-5));
  CHECK(c2.g_plus == doctest::Approx(2.0 * c.g_plus).epsilon(1e-5));
}

TEST_CASE("polarized limit: large field pins the magnetization") {
  const double v = magnetization(params(0.5, 20.0, 0.0));
  CHECK(std::abs(v - 0.5) < 0.02);
}

TEST_CASE("sigma vanishes identically at t = 0 and at a = 0") {
  CHECK(s_correlator(params(0.5, 0.5, 0.0)) == 0.0);
  CHECK(s_correlator(params(0.5, 0.0, 3.0)) == 0.0);
}

TEST_CASE("no quench (a = 0): correlators are time-independent") {
  const CorrelatorSet ref = correlator_set(params(0.5, 0.0, 0.0));
  for (double t : {1.0, 10.0}) {
    const CorrelatorSet c = correlator_set(params(0.5, 0.0, t));
    CHECK(std::abs(c.m_z - ref.m_z) <= 1e-9);
    CHECK(std::abs(c.g_plus - ref.g_plus) <= 1e-9);
    CHECK(std::abs(c.g_minus - ref.g_minus) <= 1e-9);
    CHECK(std::abs(c.sigma - ref.sigma) <= 1e-9);
  }
}

TEST_CASE("assembly identities") {
  const CorrelatorSet c = correlator_set(params(0.5, 0.78, 2.0, false, 2.0));
  CHECK(c.t_xy == c.sigma);
  CHECK(c.t_xx == -c.g_minus);
  CHECK(c.t_yy == -c.g_plus);
  CHECK(c.t_zz ==
        doctest::Approx(4.0 * c.m_z * c.m_z - c.g_plus * c.g_minus +
                        c.sigma * c.sigma)
            .epsilon(1e-15));
  CHECK(std::abs(c.m_z) <= 0.5);
  CHECK(std::abs(c.t_xx) <= 1.0);
  CHECK(std::abs(c.t_yy) <= 1.0);
  CHECK(std::abs(c.t_zz) <= 1.0);
  CHECK(std::abs(c.t_xy) <= 1.0);
}

TEST_CASE("gamma sign symmetry") {
  // m_z is even in gamma; sigma is odd; G swaps R -> -R, so the transverse
  // correlators exchange while t_zz and entanglement are invariant.
  const ModelParams p = params(0.5, 0.81, 1.5, false, 3.0);
  ModelParams m = p;
  m.gamma = -p.gamma;
  const CorrelatorSet cp = correlator_set(p);
  const CorrelatorSet cm = correlator_set(m);
  CHECK(cm.m_z == doctest::Approx(cp.m_z).epsilon(1e-10));
  CHECK(cm.sigma == doctest::Approx(-cp.sigma).epsilon(1e-10));
  CHECK(cm.g_plus == doctest::Approx(cp.g_minus).epsilon(1e-10));
  CHECK(cm.g_minus == doctest::Approx(cp.g_plus).epsilon(1e-10));
  CHECK(cm.t_zz == doctest::Approx(cp.t_zz).epsilon(1e-10));
}

TEST_CASE("t = 0: t_xy vanishes and t_zz reduces") {
  const CorrelatorSet c = correlator_set(params(0.5, 0.6, 0.0));
  CHECK(c.t_xy == 0.0);
  CHECK(c.t_zz == doctest::Approx(4.0 * c.m_z * c.m_z -
                                  c.g_plus * c.g_minus)
                      .epsilon(1e-15));
}

TEST_CASE("parity split of G: even part is R-independent") {
  // G(R) = odd-in-R part + even part; summing R = +1 and R = -1 cancels the
  // sin(phi R) integral, so g(+1) + g(-1) is twice the cos(phi R) part,
  // which is itself even under R -> -R.
  const ModelParams p = params(0.7, 0.9, 2.0);
  const double gp = g_correlator(p, 1);
  const double gm = g_correlator(p, -1);
  // Recompute the even (cos phi R) integral independently here.
  const double g = p.gamma, a = p.field_a, t = p.time_t;
  const double even = integrate([&](double phi) {
                        const double c = std::cos(phi), s = std::sin(phi);
                        const double la = dispersion(a, g, phi);
                        const double l0 = dispersion(0.0, g, phi);
                        const double w = 1.0 / (la * l0 * l0);
                        return std::cos(phi) * w *
                                   ((g * g * s * s + (c - a) * c) * c -
                                    a * g * g * s * s *
                                        std::cos(2.0 * l0 * t));
                      }).value;
  CHECK(gp + gm ==
        doctest::Approx(2.0 / std::numbers::pi * even).epsilon(1e-9));
}

TEST_CASE("R validation and error tagging") {
  CHECK_THROWS_AS(g_correlator(params(0.5, 0.5, 1.0), 2), DomainError);
  // A hopeless tolerance makes the quadrature fail; the failing integral is
  // named in the exception message.
  try {
    correlator_set(params(0.5, 0.5, 50.0), 1e-18, 200);
    CHECK(false);
  } catch (const NonConvergence& e) {
    CHECK(std::string(e.what()).find("magnetization") != std::string::npos);
  }
}
