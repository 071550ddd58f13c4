#pragma once

#include <Eigen/Dense>

#include "xychain/correlators.hpp"
#include "xychain/errors.hpp"

namespace xychain {

inline constexpr double kDefaultPosTol = 1e-8;

// One-site reduced density matrix: diag(1/2 + m_z, 1/2 - m_z).  Off-diagonal
// entries vanish because the transverse magnetizations M^x, M^y are zero at
// all times for this quench.
struct SingleSiteRDM {
  Eigen::Matrix2cd matrix;
};

// Two-site reduced density matrix of a nearest-neighbor pair in the
// computational basis {up-up, up-down, down-up, down-down}.  X-shaped:
// only the diagonal and anti-diagonal are nonzero.
struct TwoSiteRDM {
  Eigen::Matrix4cd matrix;
};

struct PhysicalityReport {
  double trace_error = 0.0;
  double min_eigenvalue = 0.0;
  double marginal_error = 0.0;
};

SingleSiteRDM single_site_rdm(double m_z);

// Builds rho12 = I/4 + m_z (S^z x I + I x S^z) + t_xy (S^x x S^y + S^y x S^x)
// + sum_j t_jj S^j x S^j via explicit Kronecker products of half-Pauli
// matrices.  Throws PhysicalityError if the trace deviates from 1 by more
// than 1e-12 or the minimum eigenvalue drops below -pos_tol.
TwoSiteRDM two_site_rdm(const CorrelatorSet& c, double pos_tol = kDefaultPosTol);

// Wraps an externally computed 4x4 density matrix (e.g. an exact
// diagonalization partial trace) with the same physicality checks.
TwoSiteRDM two_site_rdm_from_matrix(const Eigen::Matrix4cd& m,
                                    double pos_tol = kDefaultPosTol);

// Pure diagnostic: trace deviation, minimum eigenvalue, and the largest
// entrywise deviation of either one-site marginal from single_site_rdm(m_z)
// with m_z read off the state itself.
PhysicalityReport validate_physicality(const TwoSiteRDM& rho);

}  // namespace xychain
