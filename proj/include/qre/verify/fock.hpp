#pragma once

#include <Eigen/Dense>
#include <cstddef>
#include <cstdint>

#include "qre/dfact/double_factorization.hpp"
#include "qre/ingest/integrals.hpp"

namespace qre::verify {

/// Largest orbital count the dense Fock builders accept (dimension 4096).
inline constexpr std::size_t kMaxFockOrbitals = 6;

/**
 * Dense operator on the 2^(2 n_orb) occupation-number space.
 *
 * Basis state bits: spin-orbital p = i + sigma * n_orb, spin-up (sigma = 0)
 * in the low bits. Fermionic signs follow the Jordan-Wigner ordering: an
 * operator acting on p picks up (-1)^(occupied modes below p).
 */
struct FockMatrix {
  std::size_t n_orb = 0;
  Eigen::MatrixXd entries;

  std::size_t n_spin_orb() const { return 2 * n_orb; }
  std::size_t dim() const { return static_cast<std::size_t>(entries.rows()); }
};

enum class Execution { serial, parallel };

/// Electronic Hamiltonian (spin-summed one- and two-body terms) plus core_energy * I.
/// resource_limit error above kMaxFockOrbitals.
FockMatrix build_fock_matrix(const ingest::IntegralSet& integrals,
                             Execution execution = Execution::parallel);

/// sum_{ij sigma} m_ij a+_{i sigma} a_{j sigma} for a row-major n x n matrix.
Eigen::MatrixXd one_body_operator(const std::vector<double>& m, std::size_t n_orb);

/// core + h_bar term + 1/2 sum_r c_r (leaf operator)^2.
FockMatrix build_df_fock_matrix(const dfact::DFDecomposition& df);

/// Total particle-number operator (diagonal).
Eigen::MatrixXd number_operator(std::size_t n_orb);

/// Largest |eigenvalue| of a symmetric matrix.
double spectral_norm(const Eigen::MatrixXd& symmetric);

/**
 * Spectral norm of build_fock_matrix(I) - build_df_fock_matrix(df).
 * n_orb <= 3; invalid_argument when the orbital counts differ.
 */
double check_df_equivalence(const ingest::IntegralSet& integrals,
                            const dfact::DFDecomposition& df);

}  // namespace qre::verify
