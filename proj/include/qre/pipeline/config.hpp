#pragma once

#include <string>
#include <string_view>

#include "qre/logical/logical_cost.hpp"
#include "qre/physical/physical_cost.hpp"

namespace qre::pipeline {

/// Environment variable naming a JSON config file.
inline constexpr const char* kConfigEnv = "QRE_CONFIG";

struct Config {
  logical::EstimationConfig estimation;
  physical::QubitParams qubits;
  physical::CodeParams code;
  /// Accuracy window for telling binding energies apart, kJ/mol.
  double accuracy_window_kj = 20.0;
};

/**
 * Reads a JSON config. Every key is optional; unknown keys are rejected.
 *
 *   {
 *     "estimation": {"eps_total_energy": 1e-3, "error_budget": 0.01,
 *                    "budget_split": {"logical": .., "t_states": .., "rotation": ..},
 *                    "rotation_cost_coefficient": 3.0, "angle_bits": 16,
 *                    "keep_bits": 10},
 *     "qubit_preset": "qubit_gate_ns_e4",
 *     "qubit": {"t_gate": 5e-8, "t_meas": 1e-7, "p_gate": 1e-4, "p_meas": 1e-4},
 *     "code": {"a_coeff": 0.03, "p_threshold": 0.01, "d_min": 3, "d_max": 99,
 *              "factory": {"max_rounds": 3, "unit_tiles": 20, "unit_cycles": 12,
 *                          "clifford_volume": 10, "max_distance": 39}},
 *     "accuracy_window_kj": 20
 *   }
 *
 * Setting error_budget without budget_split splits it into equal thirds.
 * Throws config on malformed input.
 */
Config parse_config(std::string_view json_text);
Config load_config(const std::string& path);

/// Config from $QRE_CONFIG when set, defaults otherwise.
Config config_from_environment();

}  // namespace qre::pipeline
