#include "qre/physical/physical_cost.hpp"

#include <cmath>
#include <limits>
#include <tuple>

#include "qre/core/error.hpp"
#include "qre/logical/logical_cost.hpp"

namespace qre::physical {

using logical::checked_add;
using logical::checked_mul;

void QubitParams::validate() const {
  if (!(t_gate > 0.0 && t_meas > 0.0)) {
    throw Error(ErrorCategory::invalid_argument, "operation times must be positive");
  }
  for (double p : {p_gate, p_meas}) {
    if (!(p >= 0.0 && p < 1.0)) {
      throw Error(ErrorCategory::invalid_argument, "error rates must lie in [0, 1)");
    }
  }
}

QubitParams qubit_preset(std::string_view name) {
  if (name == "qubit_gate_ns_e4") return QubitParams{};
  if (name == "qubit_gate_ns_e3") {
    QubitParams qp;
    qp.name = "qubit_gate_ns_e3";
    qp.p_gate = qp.p_meas = 1e-3;
    return qp;
  }
  throw Error(ErrorCategory::config, "unknown qubit preset: " + std::string(name));
}

std::vector<std::string> preset_names() { return {"qubit_gate_ns_e3", "qubit_gate_ns_e4"}; }

void CodeParams::validate() const {
  if (!(a_coeff > 0.0)) throw Error(ErrorCategory::invalid_argument, "a_coeff must be positive");
  if (!(p_threshold > 0.0 && p_threshold < 1.0)) {
    throw Error(ErrorCategory::invalid_argument, "p_threshold must lie in (0, 1)");
  }
  if (d_min < 1 || d_min % 2 == 0 || d_max < d_min) {
    throw Error(ErrorCategory::invalid_argument, "d_min must be odd and <= d_max");
  }
  const FactoryModel& f = factory;
  if (f.max_rounds < 1 || f.unit_tiles < 1 || f.unit_cycles < 1 ||
      !(f.clifford_volume >= 0.0) || f.max_distance < d_min) {
    throw Error(ErrorCategory::invalid_argument, "invalid factory model");
  }
}

double cycle_time(int d, const QubitParams& qp) {
  return (4.0 * qp.t_gate + 2.0 * qp.t_meas) * d;
}

double logical_error_rate(int d, double p, const CodeParams& code) {
  if (d < 1 || d % 2 == 0) {
    throw Error(ErrorCategory::invalid_argument, "code distance must be odd and positive");
  }
  if (!(p < code.p_threshold)) {
    throw Error(ErrorCategory::invalid_argument,
                "physical error rate at or above threshold");
  }
  return code.a_coeff * std::pow(p / code.p_threshold, (d + 1) / 2);
}

std::uint64_t layout_tiles(std::uint64_t n) {
  auto root = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(8 * n)));
  while (root * root < 8 * n) ++root;
  while (root > 0 && (root - 1) * (root - 1) >= 8 * n) --root;
  return 2 * n + root + 1;
}

int select_distance(std::uint64_t n_alg_qubits, std::uint64_t cycles,
                    const QubitParams& qp, const CodeParams& code,
                    double eps_logical) {
  if (!(eps_logical > 0.0 && eps_logical < 1.0)) {
    throw Error(ErrorCategory::invalid_argument, "eps_logical must lie in (0, 1)");
  }
  const double volume = static_cast<double>(layout_tiles(n_alg_qubits)) *
                        static_cast<double>(cycles);
  for (int d = code.d_min; d <= code.d_max; d += 2) {
    if (volume * logical_error_rate(d, qp.p_gate, code) <= eps_logical) return d;
  }
  throw Error(ErrorCategory::saturation,
              "no code distance up to " + std::to_string(code.d_max) + " meets the budget");
}

namespace {

struct Candidate {
  std::vector<int> distances;
  std::vector<std::uint64_t> units;
  std::uint64_t qubits = 0;
  double duration = 0.0;
  double output = 0.0;
};

void evaluate(const QubitParams& qp, const CodeParams& code, double budget,
              std::vector<int>& distances, std::size_t rounds,
              Candidate& best, bool& found) {
  if (distances.size() < rounds) {
    for (int d = code.d_min; d <= code.factory.max_distance; d += 2) {
      distances.push_back(d);
      evaluate(qp, code, budget, distances, rounds, best, found);
      distances.pop_back();
    }
    return;
  }
  const FactoryModel& f = code.factory;
  std::vector<double> inputs(rounds);
  double p = qp.p_gate;
  for (std::size_t k = 0; k < rounds; ++k) {
    inputs[k] = p;
    p = 35.0 * p * p * p + f.clifford_volume * logical_error_rate(distances[k], qp.p_gate, code);
  }
  if (!(p <= budget)) return;

  std::vector<std::uint64_t> units(rounds, 1);
  for (std::size_t k = rounds - 1; k-- > 0;) {
    const double accept = 1.0 - 15.0 * inputs[k];
    if (!(accept > 0.0)) return;
    units[k] = units[k + 1] * static_cast<std::uint64_t>(std::ceil(15.0 / accept));
  }
  std::uint64_t qubits = 0;
  double duration = 0.0;
  for (std::size_t k = 0; k < rounds; ++k) {
    const auto d = static_cast<std::uint64_t>(distances[k]);
    qubits = std::max(qubits, units[k] * static_cast<std::uint64_t>(f.unit_tiles) * 2 * d * d);
    duration += f.unit_cycles * cycle_time(distances[k], qp);
  }
  if (!found || std::tie(qubits, duration) < std::tie(best.qubits, best.duration)) {
    best = {distances, units, qubits, duration, p};
    found = true;
  }
}

}  // namespace

FactoryDesign design_factories(const QubitParams& qp, double per_t_error_budget,
                               const CodeParams& code) {
  if (!(per_t_error_budget > 0.0 && per_t_error_budget < 1.0)) {
    throw Error(ErrorCategory::invalid_argument, "per-T budget must lie in (0, 1)");
  }
  for (int rounds = 1; rounds <= code.factory.max_rounds; ++rounds) {
    Candidate best;
    bool found = false;
    std::vector<int> distances;
    evaluate(qp, code, per_t_error_budget, distances, static_cast<std::size_t>(rounds),
             best, found);
    if (found) {
      FactoryDesign fd;
      fd.rounds = rounds;
      fd.distances = std::move(best.distances);
      fd.units = std::move(best.units);
      fd.qubits_per_factory = best.qubits;
      fd.duration = best.duration;
      fd.output_error = best.output;
      return fd;
    }
  }
  throw Error(ErrorCategory::unreachable_budget,
              "T-state budget unreachable with the allowed distillation rounds");
}

std::uint64_t count_factories(std::uint64_t t_count, std::uint64_t cycles, int d,
                              const QubitParams& qp, const FactoryDesign& fd) {
  if (t_count == 0) return 0;
  if (cycles == 0) throw Error(ErrorCategory::invalid_argument, "cycles must be positive");
  const double ratio = static_cast<double>(t_count) * fd.duration /
                       (static_cast<double>(cycles) * cycle_time(d, qp));
  // Ratios that are whole numbers up to rounding noise must not round up.
  const double nearest = std::round(ratio);
  const double count = std::abs(ratio - nearest) <= 1e-9 * nearest ? nearest : std::ceil(ratio);
  return std::max<std::uint64_t>(1, static_cast<std::uint64_t>(count));
}

PhysicalEstimate estimate_physical(std::uint64_t n_alg_qubits, std::uint64_t t_count,
                                   const QubitParams& qp, const CodeParams& code,
                                   const logical::EstimationConfig& config) {
  qp.validate();
  code.validate();
  config.validate();
  if (n_alg_qubits == 0) {
    throw Error(ErrorCategory::invalid_argument, "need at least one algorithmic qubit");
  }
  PhysicalEstimate e;
  e.tiles = layout_tiles(n_alg_qubits);
  e.cycles = t_count;
  if (t_count == 0) {
    e.distance = code.d_min;
  } else {
    e.distance = select_distance(n_alg_qubits, e.cycles, qp, code, config.budget_split.logical);
    e.factory = design_factories(
        qp, config.budget_split.t_states / static_cast<double>(t_count), code);
    e.n_factories = count_factories(t_count, e.cycles, e.distance, qp, e.factory);
    e.factory_qubits_total = checked_mul(e.n_factories, e.factory.qubits_per_factory);
    e.runtime = static_cast<double>(e.cycles) * cycle_time(e.distance, qp);
    e.logical_failure = static_cast<double>(e.tiles) * static_cast<double>(e.cycles) *
                        logical_error_rate(e.distance, qp.p_gate, code);
    e.t_state_failure = static_cast<double>(t_count) * e.factory.output_error;
  }
  const auto d = static_cast<std::uint64_t>(e.distance);
  e.n_physical_qubits = checked_add(checked_mul(e.tiles, 2 * d * d), e.factory_qubits_total);
  return e;
}

}  // namespace qre::physical
