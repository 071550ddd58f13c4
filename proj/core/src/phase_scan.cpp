#include "xychain/phase_scan.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <sstream>
#include <thread>

#include "xychain/rdm.hpp"

namespace xychain {

ScanRow evaluate_point(const ModelParams& params, double param_value) {
  ScanRow row;
  row.param = param_value;
  try {
    row.set = correlator_set(params);
    const TwoSiteRDM rho = two_site_rdm(row.set);
    const EntanglementResult ent = negativity(rho);
    row.negativity = ent.negativity;
    row.log_negativity = ent.log_negativity;
    row.min_pt_eigenvalue = ent.min_pt_eigenvalue;
  } catch (const std::exception& e) {
    row.ok = false;
    row.error = e.what();
  }
  return row;
}

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn) {
  unsigned workers = std::thread::hardware_concurrency();
  if (const char* env = std::getenv("XYCHAIN_THREADS")) {
    const long parsed = std::strtol(env, nullptr, 10);
    if (parsed > 0) workers = static_cast<unsigned>(parsed);
  }
  if (workers == 0) workers = 1;
  workers = static_cast<unsigned>(
      std::min<std::size_t>(workers, std::max<std::size_t>(n, 1)));

  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }

  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&next, n, &fn] {
      for (std::size_t i = next.fetch_add(1); i < n; i = next.fetch_add(1)) {
        fn(i);
      }
    });
  }
  for (std::thread& th : pool) th.join();
}

namespace {

ScanTable scan_over(const ModelParams& base, const std::vector<double>& grid,
                    const std::function<ModelParams(double)>& at,
                    const std::string& axis) {
  ScanTable table;
  table.rows.resize(grid.size());
  parallel_for(grid.size(), [&](std::size_t i) {
    table.rows[i] = evaluate_point(at(grid[i]), grid[i]);
  });
  table.metadata["axis"] = axis;
  std::ostringstream gamma;
  gamma.precision(17);
  gamma << base.gamma;
  table.metadata["gamma"] = gamma.str();
  return table;
}

std::vector<double> linspace(double lo, double hi, int steps) {
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(steps));
  for (int i = 0; i < steps; ++i) {
    out.push_back(steps == 1 ? lo : lo + (hi - lo) * double(i) / (steps - 1));
  }
  return out;
}

}  // namespace

ScanTable field_scan(const ModelParams& base, double a_lo, double a_hi,
                     int steps) {
  if (!(a_lo < a_hi) || steps < 2) {
    throw DomainError("field_scan: need a_lo < a_hi and steps >= 2");
  }
  return scan_over(base, linspace(a_lo, a_hi, steps),
                   [&base](double a) { return base.with_field(a); }, "field");
}

ScanTable time_scan(const ModelParams& base, double t_lo, double t_hi,
                    int steps) {
  if (!(t_lo < t_hi) || steps < 2) {
    throw DomainError("time_scan: need t_lo < t_hi and steps >= 2");
  }
  return scan_over(base, linspace(t_lo, t_hi, steps),
                   [&base](double t) { return base.with_time(t); }, "time");
}

namespace {

double log_negativity_at(const ModelParams& base, double a) {
  const ScanRow row = evaluate_point(base.with_field(a), a);
  if (!row.ok) throw NonConvergence(row.error, 0.0, 0.0, 0);
  return row.log_negativity;
}

// Bisect the boundary of {E_N > threshold} inside (lo, hi), where the
// predicate differs at the ends, down to the requested bracket width.
double bisect_threshold(const ModelParams& base, double lo, double hi,
                        double threshold, double bracket_width) {
  bool lo_pos = log_negativity_at(base, lo) > threshold;
  while (hi - lo > bracket_width) {
    const double mid = 0.5 * (lo + hi);
    const bool mid_pos = log_negativity_at(base, mid) > threshold;
    if (mid_pos == lo_pos) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace

CriticalFields find_critical_fields(const ModelParams& base, double a_lo,
                                    double a_hi, double e_zero_threshold,
                                    double bracket_width) {
  if (!(a_lo < a_hi)) {
    throw DomainError("find_critical_fields: need a_lo < a_hi");
  }
  const int steps =
      std::max(2, 1 + static_cast<int>(std::ceil((a_hi - a_lo) /
                                                 kPreScanResolution)));
  const ScanTable pre = field_scan(base, a_lo, a_hi, steps);

  std::vector<bool> positive;
  positive.reserve(pre.rows.size());
  for (const ScanRow& row : pre.rows) {
    if (!row.ok) throw NonConvergence(row.error, 0.0, 0.0, 0);
    positive.push_back(row.log_negativity > e_zero_threshold);
  }

  CriticalFields result;
  result.bracket_width = bracket_width;
  std::size_t i = 0;
  // First downward crossing: entangled -> separable.
  for (; i + 1 < positive.size(); ++i) {
    if (positive[i] && !positive[i + 1]) {
      result.a_c = bisect_threshold(base, pre.rows[i].param,
                                    pre.rows[i + 1].param, e_zero_threshold,
                                    bracket_width);
      break;
    }
  }
  if (!result.a_c) {
    throw NoTransitionFound(
        "find_critical_fields: no entangled -> separable crossing in range");
  }
  // Next upward crossing, if any: the revival boundary.
  for (++i; i + 1 < positive.size(); ++i) {
    if (!positive[i] && positive[i + 1]) {
      result.a_bar_c = bisect_threshold(base, pre.rows[i].param,
                                        pre.rows[i + 1].param,
                                        e_zero_threshold, bracket_width);
      break;
    }
  }
  return result;
}

std::vector<Temperature> default_beta_grid() {
  std::vector<Temperature> grid;
  grid.reserve(41);
  const double lo = std::log10(0.1);
  const double hi = std::log10(100.0);
  for (int i = 0; i < 40; ++i) {
    grid.push_back(Temperature::finite(std::pow(10.0, lo + (hi - lo) * i / 39.0)));
  }
  grid.push_back(Temperature::zero());
  return grid;
}

ScanTable temp_scan(const ModelParams& base,
                    const std::vector<Temperature>& beta_grid) {
  if (beta_grid.empty()) throw DomainError("temp_scan: empty beta grid");
  for (std::size_t i = 0; i + 1 < beta_grid.size(); ++i) {
    if (beta_grid[i].is_zero() ||
        (!beta_grid[i + 1].is_zero() &&
         beta_grid[i + 1].beta() <= beta_grid[i].beta())) {
      throw DomainError(
          "temp_scan: beta grid must be ascending, Zero only at the end");
    }
  }
  ScanTable table;
  table.rows.resize(beta_grid.size());
  parallel_for(beta_grid.size(), [&](std::size_t i) {
    const Temperature& T = beta_grid[i];
    // The Zero row is reported at a sentinel beta = inf position.
    const double param =
        T.is_zero() ? std::numeric_limits<double>::infinity() : T.beta();
    table.rows[i] = evaluate_point(base.with_temperature(T), param);
  });
  table.metadata["axis"] = "temperature";
  return table;
}

MonotonicityVerdict classify_monotonicity(const ScanTable& table,
                                          double noise_tol) {
  if (table.rows.size() < 8) {
    throw InsufficientData("classify_monotonicity requires >= 8 rows");
  }
  bool rises = false;
  bool falls = false;
  std::ostringstream where;
  for (std::size_t i = 0; i + 1 < table.rows.size(); ++i) {
    const double delta =
        table.rows[i + 1].log_negativity - table.rows[i].log_negativity;
    if (delta > noise_tol) {
      if (!rises) where << "rise at row " << i << "; ";
      rises = true;
    } else if (delta < -noise_tol) {
      if (!falls) where << "fall at row " << i << "; ";
      falls = true;
    }
  }
  MonotonicityVerdict verdict;
  verdict.low_T_limit = table.rows.back().log_negativity;
  verdict.rising_then = where.str();
  if (rises && falls) {
    verdict.kind = Monotonicity::Nonmonotone;
  } else if (falls) {
    verdict.kind = Monotonicity::MonotoneDecreasing;
  } else {
    verdict.kind = Monotonicity::MonotoneIncreasing;
  }
  return verdict;
}

PhaseDiagram phase_diagram(const ModelParams& base,
                           const std::vector<double>& a_grid,
                           const std::vector<double>& t_grid) {
  if (a_grid.empty() || t_grid.empty()) {
    throw DomainError("phase_diagram: grids must be nonempty");
  }
  PhaseDiagram out;
  out.a_grid = a_grid;
  out.t_grid = t_grid;
  const std::size_t total = a_grid.size() * t_grid.size();
  out.e_n.assign(total, 0.0);
  out.m_z.assign(total, 0.0);
  out.ok.assign(total, 1);
  parallel_for(total, [&](std::size_t idx) {
    const std::size_t i = idx / t_grid.size();
    const std::size_t j = idx % t_grid.size();
    const ScanRow row = evaluate_point(
        base.with_field(a_grid[i]).with_time(t_grid[j]), a_grid[i]);
    out.e_n[idx] = row.log_negativity;
    out.m_z[idx] = row.set.m_z;
    out.ok[idx] = row.ok;
  });
  return out;
}

}  // namespace xychain
