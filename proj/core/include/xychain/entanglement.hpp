#pragma once

#include <array>

#include <Eigen/Dense>

#include "xychain/rdm.hpp"

namespace xychain {

struct EntanglementResult {
  double negativity = 0.0;         // N = |sum of negative PT eigenvalues|
  double log_negativity = 0.0;     // E_N = log2(2N + 1)
  double min_pt_eigenvalue = 0.0;  // smallest eigenvalue of the PT
};

// Partial transpose with respect to the first qubit: the off-diagonal 2x2
// blocks (in the first-qubit block structure) are swapped.
Eigen::Matrix4cd partial_transpose(const TwoSiteRDM& rho);

// Eigenvalues of a 4x4 Hermitian matrix in ascending order, computed by
// cyclic complex Jacobi rotations.  Throws NotHermitian if the input deviates
// from Hermiticity by more than 1e-12 (relative to its norm).
std::array<double, 4> hermitian_eigenvalues_4x4(const Eigen::Matrix4cd& m);

EntanglementResult negativity(const TwoSiteRDM& rho);

}  // namespace xychain
