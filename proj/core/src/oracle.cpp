#include "xychain/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <map>
#include <numbers>
#include <sstream>

namespace xychain {
namespace {

using Eigen::Matrix4d;
using Eigen::MatrixXcd;
using Eigen::MatrixXd;
using Eigen::VectorXd;
using std::complex;

// Majorana pair structure of one antiperiodic momentum pair (phi, -phi):
// the generator of the quadratic form is eps * P + delta * Q with
// (eps*P + delta*Q)^2 = -(eps^2 + delta^2) * I.
Matrix4d p_matrix() {
  Matrix4d p = Matrix4d::Zero();
  p(0, 1) = 1;
  p(1, 0) = -1;
  p(2, 3) = 1;
  p(3, 2) = -1;
  return p;
}

Matrix4d q_matrix() {
  Matrix4d q = Matrix4d::Zero();
  q(0, 2) = 1;
  q(2, 0) = -1;
  q(1, 3) = -1;
  q(3, 1) = 1;
  return q;
}

const Matrix4d kP = p_matrix();
const Matrix4d kQ = q_matrix();

}  // namespace

std::vector<double> QuadraticForm::one_particle_energies() const {
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(N));
  for (std::size_t k = 0; k < phis.size(); ++k) {
    const double lam = std::hypot(eps[k], delta[k]);
    out.push_back(lam);  // +phi and -phi are degenerate
    out.push_back(lam);
  }
  std::sort(out.begin(), out.end());
  return out;
}

Eigen::Matrix4d QuadraticForm::block(std::size_t k) const {
  return eps[k] * kP + delta[k] * kQ;
}

Eigen::MatrixXd QuadraticForm::dense_generator() const {
  MatrixXd out = MatrixXd::Zero(2 * N, 2 * N);
  for (std::size_t k = 0; k < phis.size(); ++k) {
    out.block<4, 4>(4 * static_cast<Eigen::Index>(k),
                    4 * static_cast<Eigen::Index>(k)) = block(k);
  }
  return out;
}

QuadraticForm build_quadratic_form(int N, double gamma, double h,
                                   Sector sector) {
  if (N < 4 || N % 2 != 0) {
    throw BadSize("build_quadratic_form requires even N >= 4");
  }
  QuadraticForm q;
  q.N = N;
  q.gamma = gamma;
  q.h = h;
  q.sector = sector;
  q.phis.reserve(static_cast<std::size_t>(N / 2));
  for (int k = 0; k < N / 2; ++k) {
    const double phi = 2.0 * std::numbers::pi * (k + 0.5) / N;
    q.phis.push_back(phi);
    q.eps.push_back(std::cos(phi) - h);
    q.delta.push_back(gamma * std::sin(phi));
  }
  return q;
}

Eigen::MatrixXd CovarianceState::dense() const {
  MatrixXd out = MatrixXd::Zero(2 * N, 2 * N);
  for (std::size_t k = 0; k < blocks.size(); ++k) {
    out.block<4, 4>(4 * static_cast<Eigen::Index>(k),
                    4 * static_cast<Eigen::Index>(k)) = blocks[k];
  }
  return out;
}

double CovarianceState::spectral_radius() const {
  double r = 0.0;
  for (const Matrix4d& b : blocks) {
    Eigen::JacobiSVD<Matrix4d> svd(b);
    r = std::max(r, svd.singularValues().maxCoeff());
  }
  return r;
}

CovarianceState thermal_covariance(const QuadraticForm& q,
                                   const Temperature& temperature) {
  CovarianceState s;
  s.N = q.N;
  s.phis = q.phis;
  s.blocks.reserve(q.phis.size());
  for (std::size_t k = 0; k < q.phis.size(); ++k) {
    const double lam = std::hypot(q.eps[k], q.delta[k]);
    // tanh(beta lam / 2) / lam, with the zero-temperature limit 1/lam.
    // Antiperiodic momenta keep lam > 0 for every finite field.
    const double tau = temperature.is_zero()
                           ? 1.0 / lam
                           : std::tanh(0.5 * temperature.beta() * lam) / lam;
    s.blocks.push_back(-tau * q.block(k));
  }
  return s;
}

CovarianceState evolve_covariance(const CovarianceState& state,
                                  const QuadraticForm& q0, double t) {
  if (state.N != q0.N) {
    throw DimensionMismatch("evolve_covariance: state and form sizes differ");
  }
  CovarianceState out;
  out.N = state.N;
  out.phis = state.phis;
  out.blocks.reserve(state.blocks.size());
  for (std::size_t k = 0; k < state.blocks.size(); ++k) {
    const double lam = std::hypot(q0.eps[k], q0.delta[k]);
    const Matrix4d o = std::cos(lam * t) * Matrix4d::Identity() +
                       (std::sin(lam * t) / lam) * q0.block(k);
    out.blocks.push_back(o * state.blocks[k] * o.transpose());
  }
  return out;
}

double covariance_energy(const CovarianceState& state, const QuadraticForm& q) {
  if (state.N != q.N) {
    throw DimensionMismatch("covariance_energy: state and form sizes differ");
  }
  double e = 0.0;
  for (std::size_t k = 0; k < state.blocks.size(); ++k) {
    e += -0.25 * (q.block(k) * state.blocks[k]).trace();
  }
  return e;
}

CorrelatorSet covariance_observables(const CovarianceState& state) {
  const double n = static_cast<double>(state.N);
  double n0 = 0.0;
  complex<double> n1 = 0.0;
  complex<double> f1 = 0.0;
  const complex<double> i1(0.0, 1.0);
  for (std::size_t k = 0; k < state.blocks.size(); ++k) {
    const Matrix4d& g = state.blocks[k];
    const double phi = state.phis[k];
    const double npl = 0.5 + 0.5 * g(0, 1);   // occupation at +phi
    const double nmi = 0.5 + 0.5 * g(2, 3);   // occupation at -phi
    const complex<double> f =
        (-i1 * g(0, 2) + g(0, 3) + g(1, 2) + i1 * g(1, 3)) / 4.0;
    n0 += (npl + nmi) / n;
    n1 += (std::cos(phi) * (npl + nmi) + i1 * std::sin(phi) * (npl - nmi)) / n;
    f1 += -2.0 * i1 * std::sin(phi) * f / n;
  }
  CorrelatorSet c;
  c.m_z = n0 - 0.5;
  c.t_xx = 2.0 * n1.real() - 2.0 * f1.real();
  c.t_yy = 2.0 * n1.real() + 2.0 * f1.real();
  c.t_xy = 2.0 * (f1.imag() - n1.imag());
  c.t_zz = (2.0 * n0 - 1.0) * (2.0 * n0 - 1.0) + 4.0 * std::norm(f1) -
           4.0 * std::norm(n1);
  c.g_minus = -c.t_xx;
  c.g_plus = -c.t_yy;
  c.sigma = c.t_xy;
  return c;
}

CorrelatorSet free_fermion_observables(int N, const ModelParams& params,
                                       Sector sector) {
  params.validate();
  const QuadraticForm qa =
      build_quadratic_form(N, params.gamma, params.field_a, sector);
  const QuadraticForm q0 = build_quadratic_form(N, params.gamma, 0.0, sector);
  CovarianceState s = thermal_covariance(qa, params.temperature);
  s = evolve_covariance(s, q0, params.time_t);
  return covariance_observables(s);
}

// ---------------------------------------------------------------------------
// Exact diagonalization
// ---------------------------------------------------------------------------

namespace {

MatrixXcd pauli(char which) {
  MatrixXcd m(2, 2);
  switch (which) {
    case 'x':
      m << 0, 1, 1, 0;
      break;
    case 'y':
      m << 0, complex<double>(0, -1), complex<double>(0, 1), 0;
      break;
    default:
      m << 1, 0, 0, -1;
      break;
  }
  return m;
}

MatrixXcd kron(const MatrixXcd& a, const MatrixXcd& b) {
  MatrixXcd out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

// Tensor product over N sites with the given per-site operators; site 0 is
// the most significant bit of the basis index.
MatrixXcd site_op(int N, const std::map<int, MatrixXcd>& ops) {
  MatrixXcd out = MatrixXcd::Identity(1, 1);
  const MatrixXcd id2 = MatrixXcd::Identity(2, 2);
  for (int j = 0; j < N; ++j) {
    auto it = ops.find(j);
    out = kron(out, it == ops.end() ? id2 : it->second);
  }
  return out;
}

}  // namespace

Eigen::MatrixXcd ed_hamiltonian(int N, double gamma, double h,
                                Boundary boundary) {
  const MatrixXcd sx = pauli('x');
  const MatrixXcd sy = pauli('y');
  const MatrixXcd sz = pauli('z');
  const Eigen::Index dim = Eigen::Index(1) << N;
  MatrixXcd ham = MatrixXcd::Zero(dim, dim);

  for (int j = 0; j + 1 < N; ++j) {
    ham += (1.0 + gamma) / 4.0 * site_op(N, {{j, sx}, {j + 1, sx}});
    ham += (1.0 - gamma) / 4.0 * site_op(N, {{j, sy}, {j + 1, sy}});
  }

  if (boundary == Boundary::SpinRing) {
    ham += (1.0 + gamma) / 4.0 * site_op(N, {{N - 1, sx}, {0, sx}});
    ham += (1.0 - gamma) / 4.0 * site_op(N, {{N - 1, sy}, {0, sy}});
  } else {
    // Boundary bond of the antiperiodic fermion ring written back in spin
    // language: with the string K = prod_{l<N-1} sigma^z_l and Majorana
    // operators A_j = K_j sigma^x_j, B_j = i K_j sigma^y_j, antiperiodicity
    // means A_N = -A_0, B_N = -B_0, so the bond becomes
    // +(1+gamma)/4 B_{N-1} A_0 - (1-gamma)/4 A_{N-1} B_0.
    std::map<int, MatrixXcd> string_ops;
    for (int l = 0; l + 1 < N; ++l) string_ops.emplace(l, sz);
    const MatrixXcd k_string = site_op(N, string_ops);
    const MatrixXcd a0 = site_op(N, {{0, sx}});
    const MatrixXcd b0 = complex<double>(0, 1) * site_op(N, {{0, sy}});
    const MatrixXcd an1 = k_string * site_op(N, {{N - 1, sx}});
    const MatrixXcd bn1 =
        complex<double>(0, 1) * k_string * site_op(N, {{N - 1, sy}});
    ham += (1.0 + gamma) / 4.0 * (bn1 * a0);
    ham -= (1.0 - gamma) / 4.0 * (an1 * b0);
  }

  for (int j = 0; j < N; ++j) {
    ham -= h / 2.0 * site_op(N, {{j, sz}});
  }
  return ham;
}

EDReference exact_diag_reference(int N, double gamma, double a,
                                 const Temperature& temperature, double t,
                                 Boundary boundary) {
  if (N > 10) throw TooLarge("exact_diag_reference supports N <= 10");
  if (N < 2) throw BadSize("exact_diag_reference requires N >= 2");

  const MatrixXcd ha = ed_hamiltonian(N, gamma, a, boundary);
  const MatrixXcd h0 = ed_hamiltonian(N, gamma, 0.0, boundary);
  const Eigen::Index dim = ha.rows();

  Eigen::SelfAdjointEigenSolver<MatrixXcd> esa(ha);
  const VectorXd wa = esa.eigenvalues();
  const MatrixXcd& va = esa.eigenvectors();

  MatrixXcd rho;
  if (temperature.is_zero()) {
    // Equal-weight mixture over the (possibly degenerate) ground space.
    int deg = 0;
    while (deg < dim && wa(deg) - wa(0) < 1e-10) ++deg;
    const MatrixXcd ground = va.leftCols(deg);
    rho = ground * ground.adjoint() / double(deg);
  } else {
    VectorXd w = (-(temperature.beta()) * (wa.array() - wa(0))).exp();
    w /= w.sum();
    rho = va * w.asDiagonal() * va.adjoint();
  }

  Eigen::SelfAdjointEigenSolver<MatrixXcd> es0(h0);
  const VectorXd w0 = es0.eigenvalues();
  const MatrixXcd& v0 = es0.eigenvectors();
  Eigen::VectorXcd phase(dim);
  for (Eigen::Index i = 0; i < dim; ++i) {
    phase(i) = std::exp(complex<double>(0.0, -w0(i) * t));
  }
  const MatrixXcd u = v0 * phase.asDiagonal() * v0.adjoint();
  rho = u * rho * u.adjoint();

  // Partial trace down to sites 0 and 1 (most significant bits).
  const Eigen::Index rest = dim / 4;
  Eigen::Matrix4cd rho12 = Eigen::Matrix4cd::Zero();
  for (Eigen::Index p = 0; p < 4; ++p)
    for (Eigen::Index q = 0; q < 4; ++q)
      for (Eigen::Index r = 0; r < rest; ++r)
        rho12(p, q) += rho(p * rest + r, q * rest + r);

  const MatrixXcd sx = pauli('x');
  const MatrixXcd sy = pauli('y');
  const MatrixXcd sz = pauli('z');
  const MatrixXcd id2 = MatrixXcd::Identity(2, 2);
  auto expect = [&rho12](const MatrixXcd& op) {
    return (op * rho12).trace().real();
  };

  EDReference ref;
  ref.set.m_z = 0.5 * expect(kron(sz, id2));
  ref.set.t_xx = expect(kron(sx, sx));
  ref.set.t_yy = expect(kron(sy, sy));
  ref.set.t_zz = expect(kron(sz, sz));
  ref.set.t_xy = expect(kron(sx, sy));
  ref.set.g_minus = -ref.set.t_xx;
  ref.set.g_plus = -ref.set.t_yy;
  ref.set.sigma = ref.set.t_xy;
  ref.rho12 = two_site_rdm_from_matrix(rho12);
  ref.ent = negativity(ref.rho12);
  return ref;
}

// ---------------------------------------------------------------------------
// Cross validation
// ---------------------------------------------------------------------------

bool ValidationReport::all_pass() const {
  return std::all_of(entries.begin(), entries.end(),
                     [](const ValidationEntry& e) { return e.pass; });
}

std::string ValidationReport::summary() const {
  std::ostringstream out;
  for (const ValidationEntry& e : entries) {
    out << (e.pass ? "pass " : "FAIL ") << e.observable << ": " << e.lhs
        << " vs " << e.rhs << " (|diff| = " << e.diff << ", tol = " << e.tol
        << ")\n";
  }
  return out.str();
}

ValidationReport cross_validate(const ModelParams& params, int N_ff, int N_ed,
                                double tol_ed, double tol_ff) {
  params.validate();
  if (N_ed > 10) throw TooLarge("cross_validate: N_ed must be <= 10");
  if (N_ff < N_ed) throw BadSize("cross_validate: need N_ed <= N_ff");

  ValidationReport report;
  auto add = [&report](const std::string& name, double lhs, double rhs,
                       double tol) {
    const double diff = std::abs(lhs - rhs);
    report.entries.push_back({name, lhs, rhs, diff, tol, diff <= tol});
  };

  // Exact diagonalization vs free fermions at the same small N.
  const EDReference ed = exact_diag_reference(
      N_ed, params.gamma, params.field_a, params.temperature, params.time_t);
  const CorrelatorSet ff_small = free_fermion_observables(N_ed, params);
  const EntanglementResult ff_small_ent =
      negativity(two_site_rdm(ff_small));
  add("ed_vs_ff.m_z", ed.set.m_z, ff_small.m_z, tol_ed);
  add("ed_vs_ff.t_xx", ed.set.t_xx, ff_small.t_xx, tol_ed);
  add("ed_vs_ff.t_yy", ed.set.t_yy, ff_small.t_yy, tol_ed);
  add("ed_vs_ff.t_zz", ed.set.t_zz, ff_small.t_zz, tol_ed);
  add("ed_vs_ff.t_xy", ed.set.t_xy, ff_small.t_xy, tol_ed);
  add("ed_vs_ff.log_negativity", ed.ent.log_negativity,
      ff_small_ent.log_negativity, tol_ed);

  // Free fermions at large N vs the infinite-chain integrals.
  const CorrelatorSet big = free_fermion_observables(N_ff, params);
  const CorrelatorSet inf = correlator_set(params);
  add("ff_vs_integrals.m_z", big.m_z, inf.m_z, tol_ff);
  add("ff_vs_integrals.g_plus", big.g_plus, inf.g_plus, tol_ff);
  add("ff_vs_integrals.g_minus", big.g_minus, inf.g_minus, tol_ff);
  add("ff_vs_integrals.sigma", big.sigma, inf.sigma, tol_ff);
  add("ff_vs_integrals.t_xx", big.t_xx, inf.t_xx, tol_ff);
  add("ff_vs_integrals.t_yy", big.t_yy, inf.t_yy, tol_ff);
  add("ff_vs_integrals.t_zz", big.t_zz, inf.t_zz, tol_ff);
  add("ff_vs_integrals.t_xy", big.t_xy, inf.t_xy, tol_ff);
  add("ff_vs_integrals.log_negativity",
      negativity(two_site_rdm(big)).log_negativity,
      negativity(two_site_rdm(inf)).log_negativity, tol_ff);
  return report;
}

ValidationReport cross_validate_or_throw(const ModelParams& params, int N_ff,
                                         int N_ed, double tol_ed,
                                         double tol_ff) {
  ValidationReport report = cross_validate(params, N_ff, N_ed, tol_ed, tol_ff);
  for (const ValidationEntry& e : report.entries) {
    if (!e.pass) {
      throw ValidationFailure("cross_validate: " + e.observable +
                              " out of tolerance");
    }
  }
  return report;
}

}  // namespace xychain
