#pragma once

#include <Eigen/Dense>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "qre/ingest/integrals.hpp"

namespace qre::verify {

struct QpeResult {
  unsigned bits = 0;
  std::uint64_t shots = 0;
  /// Outcome probabilities and sampled counts, indexed by the m-bit integer.
  std::vector<double> probabilities;
  std::vector<std::uint64_t> counts;

  /// Most frequent sampled outcome (smallest index on ties).
  std::size_t mode() const;
  /// Phase in [0, 1) of an outcome: x / 2^bits.
  double phase(std::size_t outcome) const;
  /// Fraction of shots whose phase lies within `radius` of `phi` (cyclic).
  double mass_near(double phi, double radius) const;
};

enum class QpeMethod { automatic, circuit, spectral };

/**
 * Textbook phase estimation of U on `state` with an m-bit register.
 *
 * The circuit method applies controlled U^(2^k) to the joint register and
 * an explicit inverse QFT (used for m <= 10 by default). The spectral method
 * expands the state in U's eigenbasis and sums Fejer kernels; both give the
 * same distribution. Shots are drawn by inverse-CDF sampling from
 * std::mt19937_64(seed).
 *
 * Preconditions: dim(U) <= 64, 1 <= m <= 20, state non-zero (it is
 * normalised). non_unitary error when ||U^dagger U - I||_F > 1e-10.
 */
QpeResult run_qpe(const Eigen::MatrixXcd& u, const Eigen::VectorXcd& state, unsigned m,
                  std::uint64_t shots, std::uint64_t seed,
                  QpeMethod method = QpeMethod::automatic);

struct GroundStateEstimate {
  double lambda = 0.0;
  double offset = 0.0;  ///< core energy plus identity shift
  double phase = 0.0;
  double energy = 0.0;  ///< offset + lambda sin(2 pi phase)
  double exact = 0.0;   ///< lowest eigenvalue of the Fock matrix
};

/**
 * End-to-end check on a small system: factorise, shift H by the identity
 * part, build the walk with the factorised lambda, run QPE on the exact
 * ground state and invert the mode through E = lambda sin(2 pi phase).
 * Requires 2 * 4^n_orb <= 64.
 */
GroundStateEstimate qpe_ground_energy(const ingest::IntegralSet& integrals, unsigned m,
                                      std::uint64_t shots, std::uint64_t seed);

}  // namespace qre::verify
