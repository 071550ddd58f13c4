#include "xychain/rdm.hpp"

#include <cmath>
#include <complex>

namespace xychain {
namespace {

using Eigen::Matrix2cd;
using Eigen::Matrix4cd;
using std::complex;

Matrix2cd pauli_x() {
  Matrix2cd m;
  m << 0, 1, 1, 0;
  return m;
}
Matrix2cd pauli_y() {
  Matrix2cd m;
  m << 0, complex<double>(0, -1), complex<double>(0, 1), 0;
  return m;
}
Matrix2cd pauli_z() {
  Matrix2cd m;
  m << 1, 0, 0, -1;
  return m;
}

Matrix4cd kron2(const Matrix2cd& a, const Matrix2cd& b) {
  Matrix4cd out;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      out.block<2, 2>(2 * i, 2 * j) = a(i, j) * b;
  return out;
}

void check_physicality(const Matrix4cd& m, double pos_tol) {
  const double trace_error = std::abs(m.trace() - complex<double>(1.0));
  if (trace_error > 1e-12) {
    throw PhysicalityError("two-site density matrix trace deviates from 1 by " +
                           std::to_string(trace_error));
  }
  Eigen::SelfAdjointEigenSolver<Matrix4cd> es(m, Eigen::EigenvaluesOnly);
  const double min_eig = es.eigenvalues().minCoeff();
  if (min_eig < -pos_tol) {
    throw PhysicalityError(
        "two-site density matrix minimum eigenvalue " +
        std::to_string(min_eig) + " below -pos_tol");
  }
}

}  // namespace

SingleSiteRDM single_site_rdm(double m_z) {
  if (std::abs(m_z) > 0.5 + 1e-9) {
    throw DomainError("single_site_rdm: |m_z| exceeds 1/2");
  }
  SingleSiteRDM r;
  r.matrix = Matrix2cd::Zero();
  r.matrix(0, 0) = 0.5 + m_z;
  r.matrix(1, 1) = 0.5 - m_z;
  return r;
}

TwoSiteRDM two_site_rdm(const CorrelatorSet& c, double pos_tol) {
  const Matrix2cd id = Matrix2cd::Identity();
  const Matrix2cd sx = 0.5 * pauli_x();
  const Matrix2cd sy = 0.5 * pauli_y();
  const Matrix2cd sz = 0.5 * pauli_z();

  Matrix4cd m = 0.25 * Matrix4cd::Identity();
  m += c.m_z * (kron2(sz, id) + kron2(id, sz));
  m += c.t_xy * (kron2(sx, sy) + kron2(sy, sx));
  m += c.t_xx * kron2(sx, sx);
  m += c.t_yy * kron2(sy, sy);
  m += c.t_zz * kron2(sz, sz);

  check_physicality(m, pos_tol);
  return TwoSiteRDM{m};
}

TwoSiteRDM two_site_rdm_from_matrix(const Eigen::Matrix4cd& m, double pos_tol) {
  check_physicality(m, pos_tol);
  return TwoSiteRDM{m};
}

PhysicalityReport validate_physicality(const TwoSiteRDM& rho) {
  const Matrix4cd& m = rho.matrix;
  PhysicalityReport report;
  report.trace_error = std::abs(m.trace() - complex<double>(1.0));

  Eigen::SelfAdjointEigenSolver<Matrix4cd> es(m, Eigen::EigenvaluesOnly);
  report.min_eigenvalue = es.eigenvalues().minCoeff();

  // Marginals by partial trace over the second / first site.
  Matrix2cd left = Matrix2cd::Zero();
  Matrix2cd right = Matrix2cd::Zero();
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k) {
        left(i, j) += m(2 * i + k, 2 * j + k);
        right(i, j) += m(2 * k + i, 2 * k + j);
      }
  const double m_z = 0.5 * (left(0, 0) - left(1, 1)).real();
  const Matrix2cd ref = single_site_rdm(std::clamp(m_z, -0.5, 0.5)).matrix;
  report.marginal_error = std::max((left - ref).cwiseAbs().maxCoeff(),
                                   (right - ref).cwiseAbs().maxCoeff());
  return report;
}

}  // namespace xychain
