#pragma once

#include <cstddef>
#include <cstdint>

#include "qre/dfact/double_factorization.hpp"

namespace qre::logical {

/// Shares of the total failure probability.
struct BudgetSplit {
  double logical = 0.01 / 3.0;
  double t_states = 0.01 / 3.0;
  double rotation = 0.01 / 3.0;
};

struct EstimationConfig {
  /// Target energy accuracy in Hartree; half goes to truncation, half to QPE.
  double eps_total_energy = 1e-3;
  double error_budget = 0.01;
  BudgetSplit budget_split;
  /// T gates per bit of rotation-synthesis precision.
  double rotation_cost_coefficient = 3.0;
  /// Width of each loaded rotation angle and of the phase-gradient register.
  unsigned angle_bits = 16;
  /// Precision of the coherent-alias sampling keep values.
  unsigned keep_bits = 10;

  /// Throws invalid_argument unless every field is usable and the shares
  /// add up to error_budget within 1e-12.
  void validate() const;
};

/// Sizes of a factorised Hamiltonian that drive the walk-step cost.
struct WalkDims {
  std::size_t n_orb = 0;
  std::size_t n_leaves = 0;       ///< R
  std::size_t total_eigvals = 0;  ///< sum_r M^(r)
};

WalkDims dims_of(const dfact::DFDecomposition& df);

/// ceil(pi * lambda / (2 eps_phase)); throws invalid_argument if
/// eps_phase <= 0 or lambda < 0, resource_limit if the count exceeds 2^63.
std::uint64_t qpe_steps(double lambda, double eps_phase);

struct WalkStepCost {
  std::uint64_t t_per_step = 0;
  std::uint64_t t_lookup = 0;      ///< QROM reads of both factorisation stages
  std::uint64_t t_rotation = 0;    ///< synthesised single-qubit rotations
  std::uint64_t t_reflection = 0;  ///< reflections, selects, state-prep compares
  std::uint64_t rotations_per_step = 0;
  std::uint64_t t_per_rotation = 0;
  double eps_rotation = 0.0;

  std::size_t ancilla_qubits = 0;
  std::size_t index_qubits = 0;
  std::size_t angle_register_qubits = 0;
  std::size_t phase_gradient_qubits = 0;
  std::size_t state_prep_qubits = 0;
};

/**
 * T and ancilla cost of one controlled walk step.
 *
 * With L = R + 1 first-stage entries (leaves plus the one-body term) and
 * K = sum M + n second-stage entries:
 *
 *   lookup     = 8 (L + K)
 *   reflection = 8 n + 4 (ceil log2 L + ceil log2 K)
 *   rotation   = 4 n * ceil(coef * log2(1 / eps_rot))
 *
 * where eps_rot = budget_split.rotation / (4 n * steps) spreads the rotation
 * budget over every rotation of the run (steps is clamped to at least 1).
 * eps_rot is nudged down when needed so the product never exceeds the share.
 *
 * Ancillas: both index registers, n loaded angles of angle_bits each, a
 * phase-gradient register, two keep registers, a unary-iteration register
 * as wide as the larger index, and three flag qubits.
 */
WalkStepCost walk_step_cost(const WalkDims& dims, std::uint64_t steps,
                            const EstimationConfig& config);

struct LogicalEstimate {
  std::size_t n_orb = 0;
  double lambda = 0.0;
  std::uint64_t qpe_steps = 0;
  std::size_t phase_qubits = 0;
  std::size_t system_qubits = 0;
  std::size_t n_logical_qubits = 0;
  std::uint64_t t_count = 0;
  std::uint64_t rotations_total = 0;
  WalkStepCost step;
};

/// Full logical estimate for a factorised Hamiltonian. A zero Hamiltonian
/// needs no walk steps and costs no T gates.
LogicalEstimate estimate_logical(const dfact::DFDecomposition& df,
                                 const EstimationConfig& config = {});

/// Same model from bare dimensions and a precomputed lambda.
LogicalEstimate estimate_logical(const WalkDims& dims, double lambda,
                                 const EstimationConfig& config = {});

/// a * b, throwing resource_limit on 64-bit overflow.
std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b);
std::uint64_t checked_add(std::uint64_t a, std::uint64_t b);

}  // namespace qre::logical
