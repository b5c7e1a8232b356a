#include "qre/logical/logical_cost.hpp"

#include <cmath>
#include <numbers>

#include "qre/core/error.hpp"

namespace qre::logical {

namespace {

std::size_t ceil_log2(std::uint64_t x) {
  std::size_t bits = 0;
  while (bits < 64 && (std::uint64_t{1} << bits) < x) ++bits;
  return bits;
}

}  // namespace

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw Error(ErrorCategory::resource_limit, "T-count arithmetic overflows 64 bits");
  }
  return out;
}

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out = 0;
  if (__builtin_add_overflow(a, b, &out)) {
    throw Error(ErrorCategory::resource_limit, "T-count arithmetic overflows 64 bits");
  }
  return out;
}

void EstimationConfig::validate() const {
  const auto bad = [](const char* what) {
    throw Error(ErrorCategory::invalid_argument, what);
  };
  if (!(eps_total_energy > 0.0)) bad("eps_total_energy must be positive");
  if (!(error_budget > 0.0 && error_budget < 1.0)) bad("error_budget must lie in (0, 1)");
  const BudgetSplit& s = budget_split;
  if (!(s.logical > 0.0 && s.t_states > 0.0 && s.rotation > 0.0)) {
    bad("budget shares must be positive");
  }
  if (std::abs(s.logical + s.t_states + s.rotation - error_budget) > 1e-12) {
    bad("budget shares must sum to error_budget");
  }
  if (!(rotation_cost_coefficient > 0.0)) bad("rotation_cost_coefficient must be positive");
  if (angle_bits == 0 || keep_bits == 0) bad("register widths must be positive");
}

WalkDims dims_of(const dfact::DFDecomposition& df) {
  return {df.n_orb, df.leaves.size(), df.total_rank()};
}

std::uint64_t qpe_steps(double lambda, double eps_phase) {
  if (!(eps_phase > 0.0)) {
    throw Error(ErrorCategory::invalid_argument, "eps_phase must be positive");
  }
  if (!(lambda >= 0.0)) {
    throw Error(ErrorCategory::invalid_argument, "lambda must be non-negative");
  }
  const double steps = std::ceil(std::numbers::pi * lambda / (2.0 * eps_phase));
  if (!(steps < 0x1.0p63)) {
    throw Error(ErrorCategory::resource_limit, "QPE step count exceeds 2^63");
  }
  return static_cast<std::uint64_t>(steps);
}

WalkStepCost walk_step_cost(const WalkDims& dims, std::uint64_t steps,
                            const EstimationConfig& config) {
  const std::uint64_t n = dims.n_orb;
  const std::uint64_t first = checked_add(dims.n_leaves, 1);
  const std::uint64_t second = checked_add(dims.total_eigvals, n);

  WalkStepCost c;
  c.t_lookup = checked_mul(8, checked_add(first, second));
  c.t_reflection = checked_add(checked_mul(8, n), 4 * (ceil_log2(first) + ceil_log2(second)));

  c.rotations_per_step = checked_mul(4, n);
  const std::uint64_t total_rotations =
      checked_mul(c.rotations_per_step, std::max<std::uint64_t>(steps, 1));
  if (total_rotations > 0) {
    const double share = config.budget_split.rotation;
    const double count = static_cast<double>(total_rotations);
    double eps = share / count;
    while (eps * count > share) eps = std::nextafter(eps, 0.0);
    c.eps_rotation = eps;
    c.t_per_rotation = static_cast<std::uint64_t>(
        std::ceil(config.rotation_cost_coefficient * std::log2(1.0 / eps)));
  }
  c.t_rotation = checked_mul(c.rotations_per_step, c.t_per_rotation);
  c.t_per_step = checked_add(checked_add(c.t_lookup, c.t_reflection), c.t_rotation);

  const std::size_t first_bits = ceil_log2(first);
  const std::size_t second_bits = std::max<std::size_t>(ceil_log2(second), 1);
  c.index_qubits = first_bits + second_bits;
  c.angle_register_qubits = static_cast<std::size_t>(n) * config.angle_bits;
  c.phase_gradient_qubits = config.angle_bits;
  c.state_prep_qubits = 2 * config.keep_bits;
  const std::size_t unary = std::max(first_bits, second_bits);
  c.ancilla_qubits = c.index_qubits + c.angle_register_qubits +
                     c.phase_gradient_qubits + c.state_prep_qubits + unary + 3;
  return c;
}

LogicalEstimate estimate_logical(const WalkDims& dims, double lambda,
                                 const EstimationConfig& config) {
  config.validate();
  LogicalEstimate e;
  e.n_orb = dims.n_orb;
  e.lambda = lambda;
  e.qpe_steps = qpe_steps(lambda, 0.5 * config.eps_total_energy);
  e.step = walk_step_cost(dims, e.qpe_steps, config);
  e.system_qubits = 2 * dims.n_orb;
  e.phase_qubits = ceil_log2(e.qpe_steps);
  e.n_logical_qubits = e.system_qubits + e.phase_qubits + e.step.ancilla_qubits;
  e.t_count = checked_mul(e.qpe_steps, e.step.t_per_step);
  e.rotations_total = checked_mul(e.qpe_steps, e.step.rotations_per_step);
  return e;
}

LogicalEstimate estimate_logical(const dfact::DFDecomposition& df,
                                 const EstimationConfig& config) {
  return estimate_logical(dims_of(df), dfact::lambda_norms(df).total, config);
}

}  // namespace qre::logical
