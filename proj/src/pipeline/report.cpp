#include "qre/pipeline/report.hpp"

#include <cmath>
#include <json.hpp>
#include <map>
#include <sstream>

#include "qre/core/error.hpp"
#include "qre/core/format.hpp"

namespace qre::pipeline {

namespace {

std::vector<std::string> split(std::string_view line, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (;;) {
    const auto pos = line.find(sep, start);
    out.emplace_back(trim(line.substr(start, pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

std::uint64_t to_count(const std::string& text, std::size_t line) {
  if (const auto i = parse_integer(text); i && *i >= 0) return static_cast<std::uint64_t>(*i);
  const auto d = parse_double(text);
  if (!d || *d < 0.0 || *d >= 0x1.0p64) {
    throw ParseError(ErrorCategory::parse, line, "expected a non-negative count: " + text);
  }
  return static_cast<std::uint64_t>(std::llround(*d));
}

}  // namespace

ReportRow make_row(std::string fragment, std::string basis,
                   const logical::LogicalEstimate& logical,
                   const physical::PhysicalEstimate& physical) {
  return {std::move(fragment),
          std::move(basis),
          logical.n_orb,
          logical.n_logical_qubits,
          logical.t_count,
          physical.distance,
          physical.n_physical_qubits,
          physical.n_factories,
          physical.factory_qubits_total,
          physical.runtime};
}

const std::vector<std::string>& report_columns() {
  static const std::vector<std::string> cols = {
      "fragment",   "basis",       "n_orb",
      "n_logical",  "t_count",     "distance",
      "n_physical", "n_factories", "factory_qubits_total",
      "runtime_s"};
  return cols;
}

std::string to_csv(const std::vector<ReportRow>& rows) {
  std::string out;
  const auto& cols = report_columns();
  for (std::size_t i = 0; i < cols.size(); ++i) out += (i ? "," : "") + cols[i];
  out += '\n';
  for (const auto& r : rows) {
    out += r.fragment + ',' + r.basis + ',' + std::to_string(r.n_orb) + ',' +
           std::to_string(r.n_logical) + ',' + std::to_string(r.t_count) + ',' +
           std::to_string(r.distance) + ',' + std::to_string(r.n_physical) + ',' +
           std::to_string(r.n_factories) + ',' + std::to_string(r.factory_qubits_total) + ',' +
           format_double(r.runtime_s) + '\n';
  }
  return out;
}

std::string to_json(const std::vector<ReportRow>& rows) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& r : rows) {
    nlohmann::ordered_json j;
    j["fragment"] = r.fragment;
    j["basis"] = r.basis;
    j["n_orb"] = r.n_orb;
    j["n_logical"] = r.n_logical;
    j["t_count"] = r.t_count;
    j["distance"] = r.distance;
    j["n_physical"] = r.n_physical;
    j["n_factories"] = r.n_factories;
    j["factory_qubits_total"] = r.factory_qubits_total;
    j["runtime_s"] = r.runtime_s;
    arr.push_back(std::move(j));
  }
  return arr.dump(1) + "\n";
}

std::vector<ReportRow> parse_report_csv(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t line_no = 0;
  std::map<std::string, std::size_t> column;
  std::vector<ReportRow> rows;
  while (std::getline(in, raw)) {
    ++line_no;
    const auto line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    const auto f = split(line, ',');
    if (column.empty()) {
      for (std::size_t i = 0; i < f.size(); ++i) column[f[i]] = i;
      for (const auto& c : report_columns()) {
        if (!column.contains(c)) {
          throw ParseError(ErrorCategory::missing_header, line_no, "missing column: " + c);
        }
      }
      continue;
    }
    if (f.size() != column.size()) {
      throw ParseError(ErrorCategory::parse, line_no, "wrong number of fields");
    }
    const auto at = [&](const char* name) -> const std::string& { return f[column.at(name)]; };
    ReportRow r;
    r.fragment = at("fragment");
    r.basis = at("basis");
    r.n_orb = to_count(at("n_orb"), line_no);
    r.n_logical = to_count(at("n_logical"), line_no);
    r.t_count = to_count(at("t_count"), line_no);
    r.distance = static_cast<int>(to_count(at("distance"), line_no));
    r.n_physical = to_count(at("n_physical"), line_no);
    r.n_factories = to_count(at("n_factories"), line_no);
    r.factory_qubits_total = to_count(at("factory_qubits_total"), line_no);
    const auto rt = parse_double(at("runtime_s"));
    if (!rt) throw ParseError(ErrorCategory::parse, line_no, "bad runtime");
    r.runtime_s = *rt;
    rows.push_back(std::move(r));
  }
  if (column.empty()) throw Error(ErrorCategory::missing_header, "report has no header");
  return rows;
}

std::string to_json(const logical::LogicalEstimate& e) {
  nlohmann::ordered_json j;
  j["n_orb"] = e.n_orb;
  j["lambda"] = e.lambda;
  j["qpe_steps"] = e.qpe_steps;
  j["n_logical_qubits"] = e.n_logical_qubits;
  j["t_count"] = e.t_count;
  j["rotations_total"] = e.rotations_total;
  auto& b = j["breakdown"];
  b["system_qubits"] = e.system_qubits;
  b["phase_qubits"] = e.phase_qubits;
  b["ancilla_qubits"] = e.step.ancilla_qubits;
  b["index_qubits"] = e.step.index_qubits;
  b["angle_register_qubits"] = e.step.angle_register_qubits;
  b["phase_gradient_qubits"] = e.step.phase_gradient_qubits;
  b["state_prep_qubits"] = e.step.state_prep_qubits;
  b["t_per_step"] = e.step.t_per_step;
  b["t_lookup"] = e.step.t_lookup;
  b["t_rotation"] = e.step.t_rotation;
  b["t_reflection"] = e.step.t_reflection;
  b["t_per_rotation"] = e.step.t_per_rotation;
  b["eps_rotation"] = e.step.eps_rotation;
  return j.dump(1) + "\n";
}

std::string to_json(const physical::PhysicalEstimate& e) {
  nlohmann::ordered_json j;
  j["distance"] = e.distance;
  j["tiles"] = e.tiles;
  j["cycles"] = e.cycles;
  j["n_factories"] = e.n_factories;
  j["factory_qubits_total"] = e.factory_qubits_total;
  j["n_physical_qubits"] = e.n_physical_qubits;
  j["runtime_s"] = e.runtime;
  j["logical_failure"] = e.logical_failure;
  j["t_state_failure"] = e.t_state_failure;
  auto& f = j["factory"];
  f["rounds"] = e.factory.rounds;
  f["distances"] = e.factory.distances;
  f["units"] = e.factory.units;
  f["qubits_per_factory"] = e.factory.qubits_per_factory;
  f["duration_s"] = e.factory.duration;
  f["output_error"] = e.factory.output_error;
  return j.dump(1) + "\n";
}

std::pair<std::uint64_t, std::uint64_t> logical_totals_from_json(std::string_view text) {
  try {
    const auto j = nlohmann::json::parse(text);
    return {j.at("n_logical_qubits").get<std::uint64_t>(), j.at("t_count").get<std::uint64_t>()};
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCategory::parse, std::string("malformed logical estimate: ") + e.what());
  }
}

}  // namespace qre::pipeline
