#include "xychain/entanglement.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

namespace xychain {

using Eigen::Matrix4cd;
using std::complex;

Eigen::Matrix4cd partial_transpose(const TwoSiteRDM& rho) {
  const Matrix4cd& m = rho.matrix;
  Matrix4cd pt;
  // Index r = 2*iA + iB; transposing the A part means
  // pt[(iA,iB),(jA,jB)] = m[(jA,iB),(iA,jB)].
  for (int ia = 0; ia < 2; ++ia)
    for (int ib = 0; ib < 2; ++ib)
      for (int ja = 0; ja < 2; ++ja)
        for (int jb = 0; jb < 2; ++jb)
          pt(2 * ia + ib, 2 * ja + jb) = m(2 * ja + ib, 2 * ia + jb);
  return pt;
}

std::array<double, 4> hermitian_eigenvalues_4x4(const Eigen::Matrix4cd& m) {
  const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
  if ((m - m.adjoint()).cwiseAbs().maxCoeff() > 1e-12 * scale) {
    throw NotHermitian("hermitian_eigenvalues_4x4: input is not Hermitian");
  }

  Matrix4cd a = 0.5 * (m + m.adjoint());
  // Cyclic Jacobi: repeatedly zero the largest off-diagonal entries with
  // complex plane rotations; quadratic convergence after the first sweeps.
  for (int sweep = 0; sweep < 60; ++sweep) {
    double off = 0.0;
    for (int p = 0; p < 4; ++p)
      for (int q = p + 1; q < 4; ++q) off += std::norm(a(p, q));
    if (off < 1e-32 * scale * scale) break;

    for (int p = 0; p < 4; ++p) {
      for (int q = p + 1; q < 4; ++q) {
        const complex<double> apq = a(p, q);
        const double abs_apq = std::abs(apq);
        if (abs_apq < 1e-300) continue;
        const complex<double> phase = apq / abs_apq;
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        const double tau = (aqq - app) / (2.0 * abs_apq);
        const double t = (tau >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;

        Matrix4cd j = Matrix4cd::Identity();
        j(p, p) = c;
        j(p, q) = s;
        j(q, p) = -s * std::conj(phase);
        j(q, q) = c * std::conj(phase);
        a = (j.adjoint() * a * j).eval();
      }
    }
  }

  std::array<double, 4> ev{a(0, 0).real(), a(1, 1).real(), a(2, 2).real(),
                           a(3, 3).real()};
  std::sort(ev.begin(), ev.end());
  return ev;
}

EntanglementResult negativity(const TwoSiteRDM& rho) {
  const auto ev = hermitian_eigenvalues_4x4(partial_transpose(rho));
  double neg_sum = 0.0;
  for (double e : ev) {
    if (e < 0.0) neg_sum += -e;
  }
  EntanglementResult r;
  r.negativity = neg_sum;
  r.log_negativity = std::log2(2.0 * neg_sum + 1.0);
  r.min_pt_eigenvalue = ev[0];
  return r;
}

}  // namespace xychain
