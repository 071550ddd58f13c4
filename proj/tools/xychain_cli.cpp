// Command-line frontend: point evaluations, parameter sweeps, phase-diagram
// surfaces, and oracle cross-validation, emitting CSV or JSON.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "xychain/correlators.hpp"
#include "xychain/entanglement.hpp"
#include "xychain/errors.hpp"
#include "xychain/model.hpp"
#include "xychain/oracle.hpp"
#include "xychain/phase_scan.hpp"
#include "xychain/rdm.hpp"

namespace {

using nlohmann::json;
using namespace xychain;

constexpr int kExitOk = 0;
constexpr int kExitBadConfig = 2;
constexpr int kExitNumerical = 3;

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

struct CommonOpts {
  double gamma = 0.5;
  double field_a = 0.5;
  double time_t = 0.0;
  std::string beta = "inf";
  double abs_tol = kDefaultAbsTol;
  long eval_budget = kDefaultEvalBudget;
  double pos_tol = kDefaultPosTol;
  std::string format = "csv";
  std::string output = "-";
};

void add_common(CLI::App* cmd, CommonOpts& o, bool with_params = true) {
  // Let options that belong to the top-level app (notably --config) be given
  // after the subcommand name.
  cmd->fallthrough();
  if (with_params) {
    cmd->add_option("--gamma", o.gamma, "Anisotropy (nonzero)");
    cmd->add_option("--a", o.field_a, "Initial transverse field");
    cmd->add_option("--t", o.time_t, "Time after the quench");
    cmd->add_option("--beta", o.beta,
                    "Inverse temperature (> 0) or 'inf' for zero temperature");
  }
  cmd->add_option("--abs-tol", o.abs_tol, "Quadrature absolute tolerance")
      ->envname("XYCHAIN_ABS_TOL");
  cmd->add_option("--eval-budget", o.eval_budget,
                  "Quadrature evaluation budget")
      ->envname("XYCHAIN_EVAL_BUDGET");
  cmd->add_option("--pos-tol", o.pos_tol,
                  "Allowed negativity of density-matrix eigenvalues")
      ->envname("XYCHAIN_POS_TOL");
  cmd->add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}));
  cmd->add_option("--output,-o", o.output, "Output path ('-' for stdout)");
}

Temperature parse_beta(const std::string& s) {
  if (s == "inf" || s == "Inf" || s == "INF") return Temperature::zero();
  std::size_t pos = 0;
  double beta = 0.0;
  try {
    beta = std::stod(s, &pos);
  } catch (const std::exception&) {
    throw DomainError("--beta must be a positive number or 'inf'");
  }
  if (pos != s.size() || !(beta > 0.0)) {
    throw DomainError("--beta must be a positive number or 'inf'");
  }
  return Temperature::finite(beta);
}

ModelParams make_params(const CommonOpts& o) {
  ModelParams p;
  p.gamma = o.gamma;
  p.field_a = o.field_a;
  p.time_t = o.time_t;
  p.temperature = parse_beta(o.beta);
  p.validate();
  return p;
}

struct OutputSink {
  std::ofstream file;
  std::ostream* stream = nullptr;

  explicit OutputSink(const std::string& path) {
    if (path == "-") {
      stream = &std::cout;
    } else {
      file.open(path);
      if (!file) throw DomainError("cannot open output file: " + path);
      stream = &file;
    }
  }
  std::ostream& out() { return *stream; }
};

const char* kCsvHeader =
    "param,m_z,t_xx,t_yy,t_zz,t_xy,negativity,log_negativity,min_pt_eig";

void write_row_csv(std::ostream& os, const ScanRow& row) {
  const double nan = std::numeric_limits<double>::quiet_NaN();
  os << fmt(row.param) << ',' << fmt(row.ok ? row.set.m_z : nan) << ','
     << fmt(row.ok ? row.set.t_xx : nan) << ','
     << fmt(row.ok ? row.set.t_yy : nan) << ','
     << fmt(row.ok ? row.set.t_zz : nan) << ','
     << fmt(row.ok ? row.set.t_xy : nan) << ','
     << fmt(row.ok ? row.negativity : nan) << ','
     << fmt(row.ok ? row.log_negativity : nan) << ','
     << fmt(row.ok ? row.min_pt_eigenvalue : nan) << '\n';
}

json row_json(const ScanRow& row) {
  json j;
  j["param"] = row.param;
  j["ok"] = row.ok;
  if (row.ok) {
    j["m_z"] = row.set.m_z;
    j["g_plus"] = row.set.g_plus;
    j["g_minus"] = row.set.g_minus;
    j["sigma"] = row.set.sigma;
    j["t_xx"] = row.set.t_xx;
    j["t_yy"] = row.set.t_yy;
    j["t_zz"] = row.set.t_zz;
    j["t_xy"] = row.set.t_xy;
    j["negativity"] = row.negativity;
    j["log_negativity"] = row.log_negativity;
    j["min_pt_eig"] = row.min_pt_eigenvalue;
  } else {
    j["error"] = row.error;
  }
  return j;
}

// ---------------------------------------------------------------------------

int cmd_point(const CommonOpts& o) {
  const ModelParams params = make_params(o);
  if (params.field_a_flagged()) {
    std::cerr << "note: a = 0 means no quench; correlators are "
                 "time-independent\n";
  }
  const CorrelatorSet set =
      correlator_set(params, o.abs_tol, o.eval_budget);
  const TwoSiteRDM rho = two_site_rdm(set, o.pos_tol);
  const EntanglementResult ent = negativity(rho);
  const PhysicalityReport phys = validate_physicality(rho);

  OutputSink sink(o.output);
  if (o.format == "json") {
    ScanRow row;
    row.param = params.field_a;
    row.set = set;
    row.negativity = ent.negativity;
    row.log_negativity = ent.log_negativity;
    row.min_pt_eigenvalue = ent.min_pt_eigenvalue;
    json j = row_json(row);
    j["gamma"] = params.gamma;
    j["a"] = params.field_a;
    j["t"] = params.time_t;
    j["beta"] = o.beta;
    j["physicality"] = {{"trace_error", phys.trace_error},
                        {"min_eigenvalue", phys.min_eigenvalue},
                        {"marginal_error", phys.marginal_error}};
    sink.out() << j.dump(2) << '\n';
  } else {
    sink.out() << kCsvHeader << '\n';
    ScanRow row;
    row.param = params.field_a;
    row.set = set;
    row.negativity = ent.negativity;
    row.log_negativity = ent.log_negativity;
    row.min_pt_eigenvalue = ent.min_pt_eigenvalue;
    write_row_csv(sink.out(), row);
    sink.out() << "# gamma=" << fmt(params.gamma) << '\n'
               << "# a=" << fmt(params.field_a) << '\n'
               << "# t=" << fmt(params.time_t) << '\n'
               << "# beta=" << o.beta << '\n'
               << "# trace_error=" << fmt(phys.trace_error) << '\n'
               << "# min_eigenvalue=" << fmt(phys.min_eigenvalue) << '\n'
               << "# marginal_error=" << fmt(phys.marginal_error) << '\n';
  }
  return kExitOk;
}

struct ScanOpts {
  CommonOpts common;
  std::string axis = "field";
  double lo = 0.3;
  double hi = 1.2;
  int steps = 181;
  double e_zero_threshold = kDefaultEZeroThreshold;
  double bracket_width = kDefaultBracketWidth;
  double noise_tol = kDefaultNoiseTol;
  bool no_zero_row = false;
};

int cmd_scan(const ScanOpts& o) {
  const ModelParams base = make_params(o.common);
  ScanTable table;
  std::vector<std::pair<std::string, std::string>> footers;

  if (o.axis == "field") {
    table = field_scan(base, o.lo, o.hi, o.steps);
    try {
      const CriticalFields cf = find_critical_fields(
          base, o.lo, o.hi, o.e_zero_threshold, o.bracket_width);
      footers.emplace_back("a_c", fmt(*cf.a_c));
      footers.emplace_back("a_bar_c",
                           cf.a_bar_c ? fmt(*cf.a_bar_c) : "none");
      footers.emplace_back("bracket_width", fmt(cf.bracket_width));
    } catch (const NoTransitionFound&) {
      footers.emplace_back("a_c", "none");
    }
  } else if (o.axis == "time") {
    table = time_scan(base, o.lo, o.hi, o.steps);
  } else if (o.axis == "temperature") {
    if (!(o.lo > 0.0) || !(o.lo < o.hi) || o.steps < 2) {
      throw DomainError("temperature axis: need 0 < min < max, steps >= 2");
    }
    std::vector<Temperature> grid;
    for (int i = 0; i < o.steps; ++i) {
      grid.push_back(Temperature::finite(
          std::pow(10.0, std::log10(o.lo) + (std::log10(o.hi) -
                                             std::log10(o.lo)) *
                                                i / double(o.steps - 1))));
    }
    if (!o.no_zero_row) grid.push_back(Temperature::zero());
    table = temp_scan(base, grid);
    const MonotonicityVerdict verdict =
        classify_monotonicity(table, o.noise_tol);
    const char* kind = verdict.kind == Monotonicity::MonotoneIncreasing
                           ? "MonotoneIncreasing"
                           : verdict.kind == Monotonicity::MonotoneDecreasing
                                 ? "MonotoneDecreasing"
                                 : "Nonmonotone";
    footers.emplace_back("monotonicity", kind);
    footers.emplace_back("low_T_limit", fmt(verdict.low_T_limit));
    if (!verdict.rising_then.empty()) {
      footers.emplace_back("sign_changes", verdict.rising_then);
    }
  } else {
    throw DomainError("--axis must be field, time, or temperature");
  }

  OutputSink sink(o.common.output);
  if (o.common.format == "json") {
    json j;
    j["axis"] = o.axis;
    j["gamma"] = base.gamma;
    j["rows"] = json::array();
    for (const ScanRow& row : table.rows) j["rows"].push_back(row_json(row));
    for (const auto& [k, v] : footers) j[k] = v;
    sink.out() << j.dump(2) << '\n';
  } else {
    sink.out() << kCsvHeader << '\n';
    for (const ScanRow& row : table.rows) write_row_csv(sink.out(), row);
    for (const auto& [k, v] : footers) {
      sink.out() << "# " << k << '=' << v << '\n';
    }
  }
  const bool any_failed =
      std::any_of(table.rows.begin(), table.rows.end(),
                  [](const ScanRow& r) { return !r.ok; });
  return any_failed ? kExitNumerical : kExitOk;
}

struct PhaseDiagramOpts {
  CommonOpts common;
  double a_lo = 0.0, a_hi = 2.0;
  int a_steps = 101;
  double t_lo = 0.0, t_hi = 12.0;
  int t_steps = 61;
};

int cmd_phase_diagram(const PhaseDiagramOpts& o) {
  const ModelParams base = make_params(o.common);
  auto linspace = [](double lo, double hi, int n) {
    std::vector<double> v;
    for (int i = 0; i < n; ++i) {
      v.push_back(n == 1 ? lo : lo + (hi - lo) * i / double(n - 1));
    }
    return v;
  };
  if (o.a_steps < 1 || o.t_steps < 1) {
    throw DomainError("phase-diagram: steps must be >= 1");
  }
  const PhaseDiagram pd =
      phase_diagram(base, linspace(o.a_lo, o.a_hi, o.a_steps),
                    linspace(o.t_lo, o.t_hi, o.t_steps));

  OutputSink sink(o.common.output);
  if (o.common.format == "json") {
    json j;
    j["gamma"] = base.gamma;
    j["a_grid"] = pd.a_grid;
    j["t_grid"] = pd.t_grid;
    j["log_negativity"] = pd.e_n;
    j["m_z"] = pd.m_z;
    sink.out() << j.dump(2) << '\n';
  } else {
    sink.out() << "a,t,log_negativity,m_z\n";
    for (std::size_t i = 0; i < pd.a_grid.size(); ++i) {
      for (std::size_t j = 0; j < pd.t_grid.size(); ++j) {
        const std::size_t idx = i * pd.t_grid.size() + j;
        sink.out() << fmt(pd.a_grid[i]) << ',' << fmt(pd.t_grid[j]) << ','
                   << fmt(pd.e_n[idx]) << ',' << fmt(pd.m_z[idx]) << '\n';
      }
    }
    sink.out() << "# gamma=" << fmt(base.gamma) << '\n';
  }
  const bool any_failed =
      std::any_of(pd.ok.begin(), pd.ok.end(), [](char c) { return !c; });
  return any_failed ? kExitNumerical : kExitOk;
}

struct ValidateOpts {
  CommonOpts common;
  int n_ed = 8;
  int n_ff = 2048;
  double tol_ed = 1e-10;
  double tol_ff = 1e-3;
};

int cmd_validate(const ValidateOpts& o) {
  if (o.n_ed > 10) {
    // Configuration error, surfaced before any computation starts.
    std::cerr << "error: --n-ed must be <= 10 (Hilbert space dimension)\n";
    return kExitBadConfig;
  }
  // Finite-size tolerance scales inversely with the chain length.
  const double tol_ff = o.tol_ff * (2048.0 / double(o.n_ff));

  struct PanelPoint {
    double a, t;
    bool zero_temp;
    double beta;
  };
  const std::vector<PanelPoint> panel = {
      {0.5, 0.0, false, 1.0},  {0.5, 1.0, true, 0.0},
      {0.5, 10.0, false, 1.0}, {0.78, 0.0, true, 0.0},
      {0.78, 1.0, false, 1.0}, {0.78, 10.0, true, 0.0},
      {1.0, 0.0, false, 1.0},  {1.0, 1.0, true, 0.0},
      {1.0, 10.0, false, 1.0}};

  OutputSink sink(o.common.output);
  bool all_ok = true;
  for (const PanelPoint& pt : panel) {
    ModelParams p;
    p.gamma = 0.5;
    p.field_a = pt.a;
    p.time_t = pt.t;
    p.temperature =
        pt.zero_temp ? Temperature::zero() : Temperature::finite(pt.beta);
    const ValidationReport report =
        cross_validate(p, o.n_ff, o.n_ed, o.tol_ed, tol_ff);
    sink.out() << "point a=" << pt.a << " t=" << pt.t << " beta="
               << (pt.zero_temp ? std::string("inf") : fmt(pt.beta)) << '\n'
               << report.summary();
    all_ok = all_ok && report.all_pass();
  }
  sink.out() << (all_ok ? "validation passed\n" : "validation FAILED\n");
  return all_ok ? kExitOk : kExitNumerical;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quench dynamics of the infinite anisotropic XY chain"};
  app.require_subcommand(1);
  app.set_config("--config", "",
                 "INI configuration file; put key=value pairs under a "
                 "[<subcommand>] section. Command-line flags take precedence.");

  CommonOpts point_opts;
  CLI::App* point = app.add_subcommand(
      "point", "Evaluate correlators and entanglement at one parameter point");
  add_common(point, point_opts);

  ScanOpts scan_opts;
  CLI::App* scan =
      app.add_subcommand("scan", "Sweep field, time, or temperature");
  add_common(scan, scan_opts.common);
  scan->add_option("--axis", scan_opts.axis, "Swept parameter")
      ->check(CLI::IsMember({"field", "time", "temperature"}));
  scan->add_option("--min", scan_opts.lo, "Grid lower bound");
  scan->add_option("--max", scan_opts.hi, "Grid upper bound");
  scan->add_option("--steps", scan_opts.steps, "Grid point count");
  scan->add_option("--e-zero-threshold", scan_opts.e_zero_threshold,
                   "E_N threshold for the critical-field search")
      ->envname("XYCHAIN_EZERO_THRESHOLD");
  scan->add_option("--bracket-width", scan_opts.bracket_width,
                   "Bisection bracket width for critical fields")
      ->envname("XYCHAIN_BRACKET_WIDTH");
  scan->add_option("--noise-tol", scan_opts.noise_tol,
                   "Noise tolerance for monotonicity classification");
  scan->add_flag("--no-zero-row", scan_opts.no_zero_row,
                 "Skip the zero-temperature row in temperature scans");

  PhaseDiagramOpts pd_opts;
  CLI::App* pd = app.add_subcommand("phase-diagram",
                                    "E_N and m_z surfaces over an (a, t) grid");
  add_common(pd, pd_opts.common);
  pd->add_option("--a-min", pd_opts.a_lo, "Field grid lower bound");
  pd->add_option("--a-max", pd_opts.a_hi, "Field grid upper bound");
  pd->add_option("--a-steps", pd_opts.a_steps, "Field grid point count");
  pd->add_option("--t-min", pd_opts.t_lo, "Time grid lower bound");
  pd->add_option("--t-max", pd_opts.t_hi, "Time grid upper bound");
  pd->add_option("--t-steps", pd_opts.t_steps, "Time grid point count");

  ValidateOpts val_opts;
  CLI::App* validate = app.add_subcommand(
      "validate",
      "Cross-validate integrals, free fermions, and exact diagonalization");
  add_common(validate, val_opts.common, /*with_params=*/false);
  validate->add_option("--n-ed", val_opts.n_ed,
                       "Exact-diagonalization chain length (<= 10)");
  validate->add_option("--n-ff", val_opts.n_ff,
                       "Free-fermion chain length");
  validate->add_option("--tol-ed", val_opts.tol_ed,
                       "Exact-diag vs free-fermion tolerance");
  validate->add_option("--tol-ff", val_opts.tol_ff,
                       "Free-fermion vs integral tolerance at N = 2048");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help and friends
    app.exit(e);
    return kExitBadConfig;
  }

  try {
    if (app.got_subcommand(point)) return cmd_point(point_opts);
    if (app.got_subcommand(scan)) return cmd_scan(scan_opts);
    if (app.got_subcommand(pd)) return cmd_phase_diagram(pd_opts);
    if (app.got_subcommand(validate)) return cmd_validate(val_opts);
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitBadConfig;
  } catch (const TooLarge& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitBadConfig;
  } catch (const BadSize& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitBadConfig;
  } catch (const std::exception& e) {
    std::cerr << "numerical failure: " << e.what() << '\n';
    return kExitNumerical;
  }
  return kExitBadConfig;
}
