// Acceptance suite: one criterion per invocation (argv[1] = 1..10), each
// printing a single "criterion N: PASS/FAIL" line plus failure details.

#include <algorithm>
#include <array>
#include <atomic>
#include <cmath>
#include <complex>
#include <cstdio>
#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

#include "xychain/correlators.hpp"
#include "xychain/entanglement.hpp"
#include "xychain/model.hpp"
#include "xychain/oracle.hpp"
#include "xychain/phase_scan.hpp"
#include "xychain/rdm.hpp"

using namespace xychain;

namespace {

struct Checker {
  bool ok = true;
  std::ostringstream detail;

  void expect(bool condition, const std::string& what) {
    if (!condition) {
      ok = false;
      detail << "  failed: " << what << "\n";
    }
  }
};

ModelParams point(double gamma, double a, double t, bool zero_temp,
                  double beta = 1.0) {
  ModelParams p;
  p.gamma = gamma;
  p.field_a = a;
  p.time_t = t;
  p.temperature = zero_temp ? Temperature::zero() : Temperature::finite(beta);
  return p;
}

// The 9-point validation panel: gamma = 0.5, a in {0.5, 0.78, 1.0} crossed
// with (t, beta) pairs covering t in {0, 1, 10} and beta in {1, inf}.
std::vector<ModelParams> panel() {
  return {point(0.5, 0.5, 0.0, false),  point(0.5, 0.5, 1.0, true),
          point(0.5, 0.5, 10.0, false), point(0.5, 0.78, 0.0, true),
          point(0.5, 0.78, 1.0, false), point(0.5, 0.78, 10.0, true),
          point(0.5, 1.0, 0.0, false),  point(0.5, 1.0, 1.0, true),
          point(0.5, 1.0, 10.0, false)};
}

std::string describe(const ModelParams& p) {
  std::ostringstream s;
  s << "(a=" << p.field_a << ", t=" << p.time_t << ", beta="
    << (p.temperature.is_zero() ? std::string("inf")
                                : std::to_string(p.temperature.beta()))
    << ")";
  return s.str();
}

// --------------------------------------------------------------------------

// 1. Exact diagonalization and free fermions agree to 1e-10 at N = 8.
void criterion_1(Checker& c) {
  for (const ModelParams& p : panel()) {
    const EDReference ed = exact_diag_reference(8, p.gamma, p.field_a,
                                                p.temperature, p.time_t);
    const CorrelatorSet ff = free_fermion_observables(8, p);
    const EntanglementResult ff_ent = negativity(two_site_rdm(ff));
    const std::string at = describe(p);
    c.expect(std::abs(ed.set.m_z - ff.m_z) <= 1e-10, "m_z " + at);
    c.expect(std::abs(ed.set.t_xx - ff.t_xx) <= 1e-10, "t_xx " + at);
    c.expect(std::abs(ed.set.t_yy - ff.t_yy) <= 1e-10, "t_yy " + at);
    c.expect(std::abs(ed.set.t_zz - ff.t_zz) <= 1e-10, "t_zz " + at);
    c.expect(std::abs(ed.set.t_xy - ff.t_xy) <= 1e-10, "t_xy " + at);
    c.expect(std::abs(ed.ent.log_negativity - ff_ent.log_negativity) <= 1e-10,
             "E_N " + at);
  }
}

// 2. Infinite-chain integrals vs free fermions at N = 2048, every field.
void criterion_2(Checker& c) {
  for (const ModelParams& p : panel()) {
    const CorrelatorSet ff = free_fermion_observables(2048, p);
    const CorrelatorSet inf = correlator_set(p);
    const std::string at = describe(p);
    c.expect(std::abs(ff.m_z - inf.m_z) <= 1e-3, "m_z " + at);
    c.expect(std::abs(ff.g_plus - inf.g_plus) <= 1e-3, "g_plus " + at);
    c.expect(std::abs(ff.g_minus - inf.g_minus) <= 1e-3, "g_minus " + at);
    c.expect(std::abs(ff.sigma - inf.sigma) <= 1e-3, "sigma " + at);
    c.expect(std::abs(ff.t_xx - inf.t_xx) <= 1e-3, "t_xx " + at);
    c.expect(std::abs(ff.t_yy - inf.t_yy) <= 1e-3, "t_yy " + at);
    c.expect(std::abs(ff.t_zz - inf.t_zz) <= 1e-3, "t_zz " + at);
    c.expect(std::abs(ff.t_xy - inf.t_xy) <= 1e-3, "t_xy " + at);
  }
}

// 3. Short-time transition: E_N vanishes at a_c and revives at a_bar_c.
void criterion_3(Checker& c) {
  const CriticalFields cf =
      find_critical_fields(point(0.5, 0.0, 1.0, true), 0.6, 1.0);
  c.expect(cf.a_c.has_value(), "a_c found");
  c.expect(cf.a_bar_c.has_value(), "a_bar_c found");
  c.expect(cf.bracket_width <= 1e-4, "bracketed to 1e-4");
  if (cf.a_c) {
    c.expect(*cf.a_c > 0.74 && *cf.a_c < 0.78,
             "a_c = " + std::to_string(*cf.a_c) + " in (0.74, 0.78)");
  }
  if (cf.a_bar_c) {
    c.expect(*cf.a_bar_c > 0.78 && *cf.a_bar_c < 0.81,
             "a_bar_c = " + std::to_string(*cf.a_bar_c) + " in (0.78, 0.81)");
  }
}

// 4. Long-time transition: single crossing, no revival up to a = 2.
void criterion_4(Checker& c) {
  const ModelParams base = point(0.5, 0.0, 10.0, true);
  const CriticalFields cf = find_critical_fields(base, 0.3, 2.0);
  c.expect(cf.a_c.has_value(), "a_c found");
  c.expect(!cf.a_bar_c.has_value(), "no revival in range");
  if (cf.a_c) {
    c.expect(*cf.a_c > 0.75 && *cf.a_c < 0.85,
             "a_c = " + std::to_string(*cf.a_c) + " in (0.75, 0.85)");
    const double start = *cf.a_c + 0.01;
    const int steps = 1 + int(std::ceil((2.0 - start) / 0.005));
    const ScanTable tail = field_scan(base, start, 2.0, steps);
    for (const ScanRow& row : tail.rows) {
      c.expect(row.ok && row.log_negativity <= 1e-9,
               "E_N <= 1e-9 at a = " + std::to_string(row.param));
      if (!c.ok) break;
    }
  }
}

// 5. Temperature taxonomy at the five operating points.
void criterion_5(Checker& c) {
  struct Expectation {
    double a, t;
    Monotonicity kind;
    bool low_T_positive;  // low-T limit > 1e-3 (else <= 1e-9)
  };
  const std::vector<Expectation> table = {
      {0.5, 1.0, Monotonicity::MonotoneIncreasing, true},
      {0.78, 1.0, Monotonicity::Nonmonotone, false},
      {0.74, 1.0, Monotonicity::Nonmonotone, true},
      {0.81, 1.0, Monotonicity::Nonmonotone, true},
      {0.8, 10.0, Monotonicity::MonotoneIncreasing, true},
  };
  const std::vector<Temperature> grid = default_beta_grid();
  for (const Expectation& e : table) {
    const ModelParams base = point(0.5, e.a, e.t, true);
    const MonotonicityVerdict v =
        classify_monotonicity(temp_scan(base, grid));
    std::ostringstream at;
    at << "(a=" << e.a << ", t=" << e.t << ")";
    const char* names[] = {"MonotoneIncreasing", "MonotoneDecreasing",
                           "Nonmonotone"};
    c.expect(v.kind == e.kind,
             at.str() + " expected " + names[int(e.kind)] + ", got " +
                 names[int(v.kind)] + " with low_T_limit = " +
                 std::to_string(v.low_T_limit));
    if (e.kind == Monotonicity::Nonmonotone) {
      if (e.low_T_positive) {
        c.expect(v.low_T_limit > 1e-3,
                 at.str() + " low_T_limit > 1e-3 (got " +
                     std::to_string(v.low_T_limit) + ")");
      } else {
        c.expect(v.low_T_limit <= 1e-9,
                 at.str() + " low_T_limit <= 1e-9 (got " +
                     std::to_string(v.low_T_limit) + ")");
      }
    }
  }
}

// 6. Trivial limits.
void criterion_6(Checker& c) {
  // beta -> 0+ : everything vanishes (all correlators are O(beta)).
  const CorrelatorSet hot = correlator_set(point(0.5, 0.5, 1.0, false, 1e-9));
  c.expect(std::abs(hot.m_z) <= 1e-9, "m_z at beta -> 0");
  c.expect(std::abs(hot.g_plus) <= 1e-9, "g_plus at beta -> 0");
  c.expect(std::abs(hot.g_minus) <= 1e-9, "g_minus at beta -> 0");
  c.expect(std::abs(hot.sigma) <= 1e-9, "sigma at beta -> 0");
  c.expect(negativity(two_site_rdm(hot)).log_negativity == 0.0,
           "E_N = 0 at beta -> 0");

  // t = 0: the sigma integrand is identically zero.
  const CorrelatorSet still = correlator_set(point(0.5, 0.7, 0.0, true));
  c.expect(still.t_xy == 0.0, "t_xy exactly 0 at t = 0");

  // a = 0: no quench, time independence.
  const CorrelatorSet ref = correlator_set(point(0.5, 0.0, 0.0, false, 2.0));
  for (double t : {1.0, 10.0}) {
    const CorrelatorSet ct = correlator_set(point(0.5, 0.0, t, false, 2.0));
    c.expect(std::abs(ct.m_z - ref.m_z) <= 1e-9 &&
                 std::abs(ct.g_plus - ref.g_plus) <= 1e-9 &&
                 std::abs(ct.g_minus - ref.g_minus) <= 1e-9 &&
                 std::abs(ct.sigma - ref.sigma) <= 1e-9,
             "time independence at a = 0, t = " + std::to_string(t));
  }
}

// 7. Physicality over the full (a, t) phase-diagram grid.
void criterion_7(Checker& c) {
  const int na = 101, nt = 61;
  std::vector<double> a_grid(na), t_grid(nt);
  for (int i = 0; i < na; ++i) a_grid[i] = 2.0 * i / double(na - 1);
  for (int j = 0; j < nt; ++j) t_grid[j] = 12.0 * j / double(nt - 1);

  std::atomic<long> bad_trace{0}, bad_eig{0}, bad_marginal{0}, failed{0};
  parallel_for(std::size_t(na) * nt, [&](std::size_t idx) {
    const int i = int(idx / nt), j = int(idx % nt);
    try {
      const CorrelatorSet set =
          correlator_set(point(0.5, a_grid[i], t_grid[j], true));
      const TwoSiteRDM rho = two_site_rdm(set);
      const PhysicalityReport rep = validate_physicality(rho);
      if (rep.trace_error > 1e-12) bad_trace.fetch_add(1);
      if (rep.min_eigenvalue < -1e-8) bad_eig.fetch_add(1);
      if (rep.marginal_error > 1e-10) bad_marginal.fetch_add(1);
    } catch (const std::exception&) {
      failed.fetch_add(1);
    }
  });
  c.expect(failed.load() == 0,
           std::to_string(failed.load()) + " grid points failed");
  c.expect(bad_trace.load() == 0,
           std::to_string(bad_trace.load()) + " trace errors > 1e-12");
  c.expect(bad_eig.load() == 0,
           std::to_string(bad_eig.load()) + " eigenvalues < -1e-8");
  c.expect(bad_marginal.load() == 0,
           std::to_string(bad_marginal.load()) + " marginal errors > 1e-10");
}

// 8. Magnetization is smooth across the transition; E_N has an exact plateau.
void criterion_8(Checker& c) {
  const ModelParams base = point(0.5, 0.0, 1.0, true);
  const double da = 0.0025;
  const int steps = 1 + int(std::lround((1.2 - 0.3) / da));
  const ScanTable scan = field_scan(base, 0.3, 1.2, steps);

  double max_jump = 0.0;
  for (std::size_t i = 0; i + 1 < scan.rows.size(); ++i) {
    max_jump = std::max(max_jump, std::abs(scan.rows[i + 1].set.m_z -
                                           scan.rows[i].set.m_z));
  }
  c.expect(max_jump <= 5.0 * da,
           "max m_z neighbor jump " + std::to_string(max_jump) + " <= " +
               std::to_string(5.0 * da));

  const CriticalFields cf = find_critical_fields(base, 0.6, 1.0);
  c.expect(cf.a_c.has_value() && cf.a_bar_c.has_value(),
           "both critical fields located");
  if (cf.a_c && cf.a_bar_c) {
    long plateau = 0;
    for (const ScanRow& row : scan.rows) {
      if (row.param > *cf.a_c + 1e-3 && row.param < *cf.a_bar_c - 1e-3) {
        ++plateau;
        c.expect(row.negativity == 0.0 && row.log_negativity == 0.0,
                 "exact zero E_N at a = " + std::to_string(row.param));
      }
    }
    c.expect(plateau >= 10, "plateau sampled");
  }
}

// 9. Entanglement unit milestones and Jacobi vs closed form on 10^4 states.
void criterion_9(Checker& c) {
  CorrelatorSet bell;
  bell.t_xx = bell.t_yy = bell.t_zz = -1.0;
  const EntanglementResult singlet = negativity(two_site_rdm(bell));
  c.expect(std::abs(singlet.log_negativity - 1.0) < 1e-12, "singlet E_N = 1");

  CorrelatorSet werner;
  werner.t_xx = werner.t_yy = werner.t_zz = -1.0 / 3.0;
  c.expect(negativity(two_site_rdm(werner)).log_negativity < 1e-12,
           "Werner p = 1/3 E_N = 0");

  // 10^4 pipeline states: free-fermion N=64 over a 100x100 (a, t) grid.
  // Closed form for the X-state partial transpose: two 2x2 blocks
  // {(d1, d4; pt14 = rho23)} and {(d2, d3; pt23 = rho14*)}.
  std::atomic<long> mismatches{0};
  parallel_for(10000, [&](std::size_t idx) {
    const int i = int(idx / 100), j = int(idx % 100);
    const double a = 2.0 * i / 99.0;
    const double t = 12.0 * j / 99.0;
    const CorrelatorSet set =
        free_fermion_observables(64, point(0.5, a, t, true));
    const Eigen::Matrix4cd pt = partial_transpose(two_site_rdm(set));
    const auto jac = hermitian_eigenvalues_4x4(pt);

    auto block_eigs = [](double x, double y, std::complex<double> off) {
      const double mean = 0.5 * (x + y);
      const double rad =
          std::sqrt(0.25 * (x - y) * (x - y) + std::norm(off));
      return std::array<double, 2>{mean - rad, mean + rad};
    };
    const auto outer =
        block_eigs(pt(0, 0).real(), pt(3, 3).real(), pt(0, 3));
    const auto inner =
        block_eigs(pt(1, 1).real(), pt(2, 2).real(), pt(1, 2));
    std::array<double, 4> closed{outer[0], outer[1], inner[0], inner[1]};
    std::sort(closed.begin(), closed.end());
    for (int k = 0; k < 4; ++k) {
      if (std::abs(jac[k] - closed[k]) > 1e-12) {
        mismatches.fetch_add(1);
        break;
      }
    }
  });
  c.expect(mismatches.load() == 0,
           std::to_string(mismatches.load()) +
               " of 10000 states disagree with the X-state closed form");
}

// 10. Quadrature self-convergence on every panel integrand.
void criterion_10(Checker& c) {
  for (const ModelParams& p : panel()) {
    const std::string at = describe(p);
    c.expect(std::abs(magnetization(p, 1e-10) - magnetization(p, 5e-11)) <
                 1e-9,
             "m_z stable " + at);
    c.expect(std::abs(g_correlator(p, 1, 1e-10) -
                      g_correlator(p, 1, 5e-11)) < 1e-9,
             "g(+1) stable " + at);
    c.expect(std::abs(g_correlator(p, -1, 1e-10) -
                      g_correlator(p, -1, 5e-11)) < 1e-9,
             "g(-1) stable " + at);
    c.expect(std::abs(s_correlator(p, 1e-10) - s_correlator(p, 5e-11)) < 1e-9,
             "sigma stable " + at);
  }
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::fprintf(stderr, "usage: acceptance <criterion 1..10>\n");
    return 2;
  }
  const int which = std::atoi(argv[1]);
  using Criterion = void (*)(Checker&);
  const Criterion criteria[] = {criterion_1, criterion_2, criterion_3,
                                criterion_4, criterion_5, criterion_6,
                                criterion_7, criterion_8, criterion_9,
                                criterion_10};
  if (which < 1 || which > 10) {
    std::fprintf(stderr, "usage: acceptance <criterion 1..10>\n");
    return 2;
  }

  Checker checker;
  try {
    criteria[which - 1](checker);
  } catch (const std::exception& e) {
    checker.ok = false;
    checker.detail << "  exception: " << e.what() << "\n";
  }
  std::printf("criterion %d: %s\n", which, checker.ok ? "PASS" : "FAIL");
  if (!checker.ok) std::printf("%s", checker.detail.str().c_str());
  return checker.ok ? 0 : 1;
}
