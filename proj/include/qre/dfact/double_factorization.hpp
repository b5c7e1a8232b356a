#pragma once

#include <cstddef>
#include <limits>
#include <string>
#include <vector>

#include "qre/ingest/integrals.hpp"

namespace qre::dfact {

/// One first-stage term: weight c_r times the square of the one-body
/// operator sum_m eigvals[m] * R_m R_m^T (both spin sectors).
struct DFLeaf {
  double weight = 0.0;
  std::vector<double> eigvals;
  /// Row-major, one orthonormal n_orb-vector per kept eigenvalue.
  std::vector<double> vecs;
  /// Frobenius norm of the second-stage eigenpairs dropped from this leaf.
  double discarded_norm = 0.0;

  std::size_t rank() const noexcept { return eigvals.size(); }

  bool operator==(const DFLeaf&) const = default;
};

struct DFDecomposition {
  std::size_t n_orb = 0;
  double core_energy = 0.0;
  /// Row-major corrected one-body matrix h_ij - 1/2 sum_l (il|lj).
  std::vector<double> h_bar;
  std::vector<DFLeaf> leaves;
  double tol_first = 0.0;
  double tol_second = 0.0;
  /// Sum of |c| over dropped first-stage eigenvalues.
  double discarded_first = 0.0;

  std::size_t total_rank() const noexcept;

  bool operator==(const DFDecomposition&) const = default;
};

enum class Execution { serial, parallel };

/**
 * Two-step factorisation of the two-electron tensor.
 *
 * Stage 1 diagonalises the pair matrix V_{(ij),(kl)} = (ij|kl) (in the
 * isometric packed form, off-diagonal pairs weighted by sqrt 2) and keeps
 * leaves while the summed |c| of the dropped ones stays <= tol_first.
 * Stage 2 diagonalises every kept leaf matrix under the same rule with
 * tol_second. Eigenvalues below 1e-12 (relative to the largest) are always
 * dropped and counted as discarded.
 *
 * `parallel` runs the per-leaf stage-2 solves under OpenMP; the result is
 * identical to `serial`.
 *
 * Throws asymmetric_input if h1 is not symmetric within 1e-12,
 * invalid_argument for negative or NaN tolerances, numerical_failure if an
 * eigensolve fails.
 */
DFDecomposition factorize(const ingest::IntegralSet& integrals,
                          double tol_first = 0.0, double tol_second = 0.0,
                          Execution execution = Execution::parallel);

/// Leaf matrix sum_m eigvals[m] R_m R_m^T (row-major, n x n).
std::vector<double> leaf_matrix(const DFLeaf& leaf, std::size_t n_orb);

/// Dense n^4 tensor sum_r c_r L_ij L_kl, index ((i*n + j)*n + k)*n + l.
std::vector<double> reconstruct(const DFDecomposition& df);

/// Rigorous bound on the 2-norm (in fact the trace norm) of the pair-matrix
/// error V - V_reconstructed implied by the recorded truncation.
double pair_matrix_error_bound(const DFDecomposition& df);

/// Bound on the Fock-space operator-norm error of the truncated
/// Hamiltonian: 2 n_orb * pair_matrix_error_bound(df).
double fock_space_error_bound(const DFDecomposition& df);

struct LambdaNorms {
  double one_body = 0.0;  ///< lambda_T
  double two_body = 0.0;  ///< lambda_V
  double total = 0.0;     ///< lambda_T + lambda_V
};

/// Spin factor s in lambda_V = (s/4) sum_r |c_r| (sum_m |lambda_m|)^2.
inline constexpr double kSpinFactor = 2.0;

/**
 * Block-encoding normalisation of the factorised Hamiltonian.
 *
 * Each squared term is rewritten around its trace, c (O - Tr L)^2, and the
 * one-body part is taken in the traceless occupation form (n - 1/2). That
 * moves c_r Tr(L^r) L^r into the one-body matrix (see shifted_one_body) and
 * leaves only an identity shift behind, so
 *
 *     lambda_T = sum_k |eig_k(shifted_one_body)|
 *     lambda_V = (kSpinFactor / 4) sum_r |c_r| (sum_m |lambda_m^(r)|)^2
 *
 * bound the norm of H - (core + identity_shift) I.
 */
LambdaNorms lambda_norms(const DFDecomposition& df);

/// h_bar + sum_r c_r Tr(L^r) L^r (row-major).
std::vector<double> shifted_one_body(const DFDecomposition& df);

/// Tr(shifted_one_body) - 1/2 sum_r c_r Tr(L^r)^2.
double identity_shift(const DFDecomposition& df);

struct Tolerances {
  double first = 0.0;
  double second = 0.0;
};

/**
 * Equal first/second tolerances t such that fock_space_error_bound stays
 * <= eps_target / 2:  t = eps / (4 n (1 + 2 sqrt(P) ||V||_F)), where P is
 * the number of orbital pairs. Infinite eps gives infinite tolerances.
 */
Tolerances choose_tolerances(const ingest::IntegralSet& integrals,
                             double eps_target);

/// Stable JSON form (shortest round-trip doubles; infinite tolerances as null).
std::string to_json(const DFDecomposition& df);
DFDecomposition from_json(const std::string& text);

}  // namespace qre::dfact
