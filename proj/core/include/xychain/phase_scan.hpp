#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "xychain/correlators.hpp"
#include "xychain/entanglement.hpp"
#include "xychain/model.hpp"

namespace xychain {

inline constexpr double kDefaultEZeroThreshold = 1e-9;
inline constexpr double kDefaultBracketWidth = 1e-4;
inline constexpr double kPreScanResolution = 0.005;
inline constexpr double kDefaultNoiseTol = 1e-8;

// One evaluated grid point of a sweep.  If the quadrature or physicality
// check failed, ok = false and error holds the message; the scan continues.
struct ScanRow {
  double param = 0.0;
  CorrelatorSet set;
  double negativity = 0.0;
  double log_negativity = 0.0;
  double min_pt_eigenvalue = 0.0;
  bool ok = true;
  std::string error;
};

struct ScanTable {
  std::vector<ScanRow> rows;
  std::map<std::string, std::string> metadata;
};

struct CriticalFields {
  std::optional<double> a_c;      // entangled -> separable boundary
  std::optional<double> a_bar_c;  // revival boundary, absent if none in range
  double bracket_width = 0.0;
};

enum class Monotonicity { MonotoneIncreasing, MonotoneDecreasing, Nonmonotone };

struct MonotonicityVerdict {
  Monotonicity kind = Monotonicity::MonotoneIncreasing;
  std::string rising_then;  // description of the sign-change locations
  double low_T_limit = 0.0;  // E_N at the largest beta sampled
};

// Row-major E_N and m_z surfaces over an (a, t) grid; entry (i, j) is
// a_grid[i], t_grid[j] at index i * t_grid.size() + j.
struct PhaseDiagram {
  std::vector<double> a_grid;
  std::vector<double> t_grid;
  std::vector<double> e_n;
  std::vector<double> m_z;
  std::vector<char> ok;  // not vector<bool>: slots are written concurrently
};

// Full pipeline at a single point: correlators -> two-site RDM -> negativity.
ScanRow evaluate_point(const ModelParams& params, double param_value);

// Deterministic parallel map: fn(i) for i in [0, n), executed on up to
// XYCHAIN_THREADS (default: hardware concurrency) workers; results must be
// written to independent slots so collection order is the index order.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

ScanTable field_scan(const ModelParams& base, double a_lo, double a_hi,
                     int steps);
ScanTable time_scan(const ModelParams& base, double t_lo, double t_hi,
                    int steps);

// Bisection on the grid-bracketed crossings of E_N - e_zero_threshold after a
// prescan at resolution kPreScanResolution.  Throws NoTransitionFound if E_N
// never crosses the threshold downward in range.
CriticalFields find_critical_fields(
    const ModelParams& base, double a_lo, double a_hi,
    double e_zero_threshold = kDefaultEZeroThreshold,
    double bracket_width = kDefaultBracketWidth);

// 40 log-spaced beta values on [0.1, 100] followed by the exact Zero variant.
std::vector<Temperature> default_beta_grid();

ScanTable temp_scan(const ModelParams& base,
                    const std::vector<Temperature>& beta_grid);

// Successive E_N differences with |delta| <= noise_tol treated as flat;
// Nonmonotone iff both a rise and a fall exceed noise_tol.  Requires >= 8
// rows (InsufficientData otherwise).
MonotonicityVerdict classify_monotonicity(const ScanTable& table,
                                          double noise_tol = kDefaultNoiseTol);

PhaseDiagram phase_diagram(const ModelParams& base,
                           const std::vector<double>& a_grid,
                           const std::vector<double>& t_grid);

}  // namespace xychain
