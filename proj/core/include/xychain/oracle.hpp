#pragma once

#include <string>
#include <vector>

#include <Eigen/Dense>

#include "xychain/correlators.hpp"
#include "xychain/entanglement.hpp"
#include "xychain/model.hpp"
#include "xychain/rdm.hpp"

namespace xychain {

// Fermion-parity sector of the ring after the Jordan-Wigner transformation.
// The free-fermion oracle works in the even-parity (antiperiodic) sector,
// whose momenta are phi_k = 2 pi (k + 1/2) / N.
enum class Sector { Even };

// Boundary condition for the exact-diagonalization reference.
//  - FermionAntiperiodic: the spin Hamiltonian whose Jordan-Wigner image is
//    the antiperiodic fermion ring in every parity sector (boundary bond
//    carries the full parity string).  This is the exact small-N counterpart
//    of the free-fermion oracle: the two agree to machine precision.
//  - SpinRing: the plain translation-invariant spin ring; differs from the
//    free-fermion oracle by parity-sector mixing of order 1/N.
enum class Boundary { FermionAntiperiodic, SpinRing };

// Quadratic fermion form of H = sum[(1+gamma) S^x S^x + (1-gamma) S^y S^y]
// - h sum S^z on an N-site ring, stored momentum-resolved: each antiperiodic
// momentum pair (phi, -phi) contributes a 4x4 real antisymmetric Majorana
// generator eps(phi) P + delta(phi) Q with eps = cos(phi) - h,
// delta = gamma sin(phi).
struct QuadraticForm {
  int N = 0;
  double gamma = 0.0;
  double h = 0.0;
  Sector sector = Sector::Even;
  std::vector<double> phis;   // N/2 momenta in (0, pi)
  std::vector<double> eps;    // cos(phi_k) - h
  std::vector<double> delta;  // gamma sin(phi_k)

  // One-particle energies Lambda(h, +-phi_k), size N, ascending.
  std::vector<double> one_particle_energies() const;

  // 2N x 2N real antisymmetric generator, block diagonal in the momentum
  // Majorana basis (four Majorana modes per momentum pair).
  Eigen::MatrixXd dense_generator() const;

  // 4x4 generator block for momentum pair k.
  Eigen::Matrix4d block(std::size_t k) const;
};

QuadraticForm build_quadratic_form(int N, double gamma, double h,
                                   Sector sector = Sector::Even);

// Majorana covariance matrix of a Gaussian state, stored as the same
// momentum-pair 4x4 blocks as QuadraticForm (the state is translation
// invariant, so the covariance is block diagonal in that basis).
struct CovarianceState {
  int N = 0;
  std::vector<double> phis;
  std::vector<Eigen::Matrix4d> blocks;

  Eigen::MatrixXd dense() const;
  // Largest singular value of any block = spectral radius of i*Gamma;
  // physical states have it <= 1.
  double spectral_radius() const;
};

// Gibbs-state covariance of the quadratic form: mode occupations
// tanh(beta Lambda / 2) in the diagonalizing basis; the Zero variant fills
// ground-state occupations exactly.
CovarianceState thermal_covariance(const QuadraticForm& q,
                                   const Temperature& temperature);

// Gamma(t) = O(t) Gamma O(t)^T with O(t) the orthogonal one-body propagator
// generated by q0 (the post-quench form, h = 0).
CovarianceState evolve_covariance(const CovarianceState& state,
                                  const QuadraticForm& q0, double t);

// Gaussian-state energy <H> for the given quadratic form; conserved under
// evolve_covariance with the same form.
double covariance_energy(const CovarianceState& state, const QuadraticForm& q);

// Magnetization and nearest-neighbor correlators of the Gaussian state via
// Wick contractions; the raw g/sigma fields are filled from the assembly
// relations.
CorrelatorSet covariance_observables(const CovarianceState& state);

// Full pipeline convenience: thermal state at field a, evolve at h = 0.
CorrelatorSet free_fermion_observables(int N, const ModelParams& params,
                                       Sector sector = Sector::Even);

// Dense spin-space Hamiltonian used by the exact-diagonalization reference.
Eigen::MatrixXcd ed_hamiltonian(int N, double gamma, double h,
                                Boundary boundary);

struct EDReference {
  CorrelatorSet set;
  TwoSiteRDM rho12;
  EntanglementResult ent;
};

// Brute force on the 2^N-dimensional Hilbert space: Gibbs (or degenerate
// ground-space averaged) state of H(a), evolved with H(0) by spectral
// decomposition, partial-traced to two adjacent sites.  N <= 10.
EDReference exact_diag_reference(int N, double gamma, double a,
                                 const Temperature& temperature, double t,
                                 Boundary boundary = Boundary::FermionAntiperiodic);

struct ValidationEntry {
  std::string observable;
  double lhs = 0.0;
  double rhs = 0.0;
  double diff = 0.0;
  double tol = 0.0;
  bool pass = false;
};

struct ValidationReport {
  std::vector<ValidationEntry> entries;
  bool all_pass() const;
  std::string summary() const;
};

// Three-way comparison at one parameter point: exact diagonalization vs
// free fermions at N_ed (tol_ed), and free fermions at N_ff vs the
// infinite-chain integrals (tol_ff, finite-size limited).
ValidationReport cross_validate(const ModelParams& params, int N_ff, int N_ed,
                                double tol_ed = 1e-10, double tol_ff = 1e-3);

// cross_validate that throws ValidationFailure naming the first observable
// out of tolerance.
ValidationReport cross_validate_or_throw(const ModelParams& params, int N_ff,
                                         int N_ed, double tol_ed = 1e-10,
                                         double tol_ff = 1e-3);

}  // namespace xychain
