#include "qre/pipeline/config.hpp"

#include <cstdlib>
#include <fstream>
#include <initializer_list>
#include <json.hpp>
#include <sstream>

#include "qre/core/error.hpp"

namespace qre::pipeline {

namespace {

using nlohmann::json;

void only_keys(const json& j, std::string_view where,
               std::initializer_list<std::string_view> allowed) {
  if (!j.is_object()) {
    throw Error(ErrorCategory::config, std::string(where) + " must be an object");
  }
  for (const auto& item : j.items()) {
    bool ok = false;
    for (auto key : allowed) ok = ok || item.key() == key;
    if (!ok) {
      throw Error(ErrorCategory::config,
                  "unknown key '" + item.key() + "' in " + std::string(where));
    }
  }
}

template <typename T>
void read(const json& j, const char* key, T& out) {
  if (j.contains(key)) out = j.at(key).get<T>();
}

}  // namespace

Config parse_config(std::string_view json_text) {
  Config c;
  try {
    const json root = json::parse(json_text);
    only_keys(root, "config",
              {"estimation", "qubit_preset", "qubit", "code", "accuracy_window_kj"});

    if (root.contains("estimation")) {
      const json& e = root.at("estimation");
      only_keys(e, "estimation",
                {"eps_total_energy", "error_budget", "budget_split",
                 "rotation_cost_coefficient", "angle_bits", "keep_bits"});
      auto& est = c.estimation;
      read(e, "eps_total_energy", est.eps_total_energy);
      read(e, "error_budget", est.error_budget);
      if (e.contains("budget_split")) {
        const json& s = e.at("budget_split");
        only_keys(s, "budget_split", {"logical", "t_states", "rotation"});
        read(s, "logical", est.budget_split.logical);
        read(s, "t_states", est.budget_split.t_states);
        read(s, "rotation", est.budget_split.rotation);
      } else if (e.contains("error_budget")) {
        const double third = est.error_budget / 3.0;
        est.budget_split = {third, third, est.error_budget - 2.0 * third};
      }
      read(e, "rotation_cost_coefficient", est.rotation_cost_coefficient);
      read(e, "angle_bits", est.angle_bits);
      read(e, "keep_bits", est.keep_bits);
    }

    if (root.contains("qubit_preset")) {
      c.qubits = physical::qubit_preset(root.at("qubit_preset").get<std::string>());
    }
    if (root.contains("qubit")) {
      const json& q = root.at("qubit");
      only_keys(q, "qubit", {"name", "t_gate", "t_meas", "p_gate", "p_meas"});
      read(q, "name", c.qubits.name);
      read(q, "t_gate", c.qubits.t_gate);
      read(q, "t_meas", c.qubits.t_meas);
      read(q, "p_gate", c.qubits.p_gate);
      read(q, "p_meas", c.qubits.p_meas);
    }
    if (root.contains("code")) {
      const json& k = root.at("code");
      only_keys(k, "code", {"a_coeff", "p_threshold", "d_min", "d_max", "factory"});
      read(k, "a_coeff", c.code.a_coeff);
      read(k, "p_threshold", c.code.p_threshold);
      read(k, "d_min", c.code.d_min);
      read(k, "d_max", c.code.d_max);
      if (k.contains("factory")) {
        const json& f = k.at("factory");
        only_keys(f, "factory",
                  {"max_rounds", "unit_tiles", "unit_cycles", "clifford_volume", "max_distance"});
        auto& fm = c.code.factory;
        read(f, "max_rounds", fm.max_rounds);
        read(f, "unit_tiles", fm.unit_tiles);
        read(f, "unit_cycles", fm.unit_cycles);
        read(f, "clifford_volume", fm.clifford_volume);
        read(f, "max_distance", fm.max_distance);
      }
    }
    read(root, "accuracy_window_kj", c.accuracy_window_kj);
  } catch (const json::exception& e) {
    throw Error(ErrorCategory::config, std::string("invalid config: ") + e.what());
  }

  try {
    c.estimation.validate();
    c.qubits.validate();
    c.code.validate();
  } catch (const Error& e) {
    throw Error(ErrorCategory::config, e.what());
  }
  if (!(c.accuracy_window_kj >= 0.0)) {
    throw Error(ErrorCategory::config, "accuracy_window_kj must be non-negative");
  }
  return c;
}

Config load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCategory::io, "cannot open config file: " + path);
  std::ostringstream text;
  text << in.rdbuf();
  return parse_config(text.str());
}

Config config_from_environment() {
  const char* path = std::getenv(kConfigEnv);
  if (path == nullptr || *path == '\0') return Config{};
  return load_config(path);
}

}  // namespace qre::pipeline
