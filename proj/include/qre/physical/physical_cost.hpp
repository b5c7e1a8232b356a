#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "qre/logical/logical_cost.hpp"

namespace qre::physical {

struct QubitParams {
  std::string name = "qubit_gate_ns_e4";
  double t_gate = 50e-9;  ///< seconds
  double t_meas = 100e-9;
  double p_gate = 1e-4;
  double p_meas = 1e-4;

  void validate() const;
};

/// Built-in presets by name; throws config for unknown names.
QubitParams qubit_preset(std::string_view name);
std::vector<std::string> preset_names();

/// Internal constants of the 15-to-1 distillation unit.
struct FactoryModel {
  int max_rounds = 3;
  /// Surface-code tiles occupied by one distillation unit.
  int unit_tiles = 20;
  /// Logical cycles (at the unit's own distance) per distillation round.
  int unit_cycles = 12;
  /// Tile-cycles of Clifford volume whose failures reach the output state.
  double clifford_volume = 10.0;
  /// Largest stage distance tried by the search.
  int max_distance = 39;
};

struct CodeParams {
  double a_coeff = 0.03;
  double p_threshold = 0.01;
  int d_min = 3;
  int d_max = 99;
  FactoryModel factory;

  void validate() const;
};

/// (4 t_gate + 2 t_meas) d.
double cycle_time(int d, const QubitParams& qp);

/// a (p / p_th)^((d+1)/2); invalid_argument for p >= p_th or bad d.
double logical_error_rate(int d, double p, const CodeParams& code);

/// 2n + ceil(sqrt(8n)) + 1.
std::uint64_t layout_tiles(std::uint64_t n_alg_qubits);

/// Smallest odd d >= d_min with tiles * cycles * error(d) <= eps_logical;
/// saturation error past d_max.
int select_distance(std::uint64_t n_alg_qubits, std::uint64_t cycles,
                    const QubitParams& qp, const CodeParams& code,
                    double eps_logical);

struct FactoryDesign {
  int rounds = 0;
  /// Stage distances, first (raw-input) stage first.
  std::vector<int> distances;
  /// Distillation units per stage.
  std::vector<std::uint64_t> units;
  std::uint64_t qubits_per_factory = 0;
  double duration = 0.0;  ///< seconds
  double output_error = 0.0;
};

/**
 * Cheapest stack of 15-to-1 rounds reaching `per_t_error_budget`.
 *
 * A round at distance d turns inputs of error p into outputs of error
 * 35 p^3 + clifford_volume * error(d). The last stage has one unit; each
 * lower stage feeds it with ceil(15 / (1 - 15 p_in)) units per unit above.
 * Stages run one after another on a shared footprint, so the factory holds
 * the largest stage and takes the sum of stage durations.
 *
 * The fewest rounds that can reach the budget win; among those the design
 * with fewest qubits, then the shortest one.
 */
FactoryDesign design_factories(const QubitParams& qp, double per_t_error_budget,
                               const CodeParams& code);

/// ceil(t_count * duration / (cycles * t_cycle(d))).
std::uint64_t count_factories(std::uint64_t t_count, std::uint64_t cycles, int d,
                              const QubitParams& qp, const FactoryDesign& fd);

struct PhysicalEstimate {
  int distance = 0;
  std::uint64_t tiles = 0;
  std::uint64_t cycles = 0;
  FactoryDesign factory;
  std::uint64_t n_factories = 0;
  std::uint64_t factory_qubits_total = 0;
  std::uint64_t n_physical_qubits = 0;
  double runtime = 0.0;  ///< seconds
  /// Post-hoc failure probabilities of the two budgeted parts.
  double logical_failure = 0.0;
  double t_state_failure = 0.0;
};

PhysicalEstimate estimate_physical(std::uint64_t n_alg_qubits, std::uint64_t t_count,
                                   const QubitParams& qp, const CodeParams& code,
                                   const logical::EstimationConfig& config);

}  // namespace qre::physical
