#include <CLI11.hpp>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "qre/core/error.hpp"
#include "qre/core/format.hpp"
#include "qre/dfact/double_factorization.hpp"
#include "qre/ingest/geometry.hpp"
#include "qre/ingest/integrals.hpp"
#include "qre/logical/logical_cost.hpp"
#include "qre/physical/physical_cost.hpp"
#include "qre/pipeline/config.hpp"
#include "qre/pipeline/fmo.hpp"
#include "qre/pipeline/report.hpp"
#include "qre/pipeline/scaling.hpp"
#include "qre/pipeline/table.hpp"

namespace {

using namespace qre;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCategory::io, "cannot open " + path);
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

pipeline::Config load(const std::string& config_path) {
  return config_path.empty() ? pipeline::config_from_environment()
                             : pipeline::load_config(config_path);
}

void print_table(const pipeline::TableComparison& t, bool json) {
  if (json) {
    std::vector<pipeline::ReportRow> rows;
    for (const auto& r : t.rows) {
      auto row = r.expected;
      row.distance = r.computed.distance;
      row.n_physical = r.computed.n_physical_qubits;
      row.n_factories = r.computed.n_factories;
      row.factory_qubits_total = r.computed.factory_qubits_total;
      row.runtime_s = r.computed.runtime;
      rows.push_back(row);
    }
    std::cout << pipeline::to_json(rows);
    return;
  }
  std::cout << "fragment,basis,distance,distance_expected,n_physical,n_physical_expected,"
               "n_physical_rel_error,n_factories,n_factories_expected,runtime_s,"
               "runtime_expected,runtime_rel_error,status\n";
  for (const auto& r : t.rows) {
    const bool ok = r.distance_ok && r.qubits_ok && r.runtime_ok && r.factories_ok;
    std::cout << r.expected.fragment << ',' << r.expected.basis << ',' << r.computed.distance
              << ',' << r.expected.distance << ',' << r.computed.n_physical_qubits << ','
              << r.expected.n_physical << ',' << format_double(r.qubits_rel_error) << ','
              << r.computed.n_factories << ',' << r.expected.n_factories << ','
              << format_double(r.computed.runtime) << ',' << format_double(r.expected.runtime_s)
              << ',' << format_double(r.runtime_rel_error) << ',' << (ok ? "match" : "mismatch")
              << '\n';
  }
  const auto n = t.rows.size();
  std::cout << "# distance " << t.distance_matches << '/' << n << ", physical qubits "
            << t.qubit_matches << '/' << n << ", runtime " << t.runtime_matches << '/' << n
            << ", factories " << t.factory_matches << '/' << n << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fault-tolerant resource estimation for double-factorized qubitization"};
  app.require_subcommand(1);
  std::string config_path;
  app.add_option("--config", config_path,
                 "JSON config file (defaults to $" + std::string(pipeline::kConfigEnv) + ")");

  std::string xyz_path;
  auto* parse_xyz = app.add_subcommand("parse-xyz", "Parse and re-emit an XYZ geometry");
  parse_xyz->add_option("file", xyz_path)->required();

  std::string integrals_path;
  double tol_first = 0.0, tol_second = 0.0, eps = 0.0;
  auto* factorize = app.add_subcommand("factorize", "Double-factorize an integral file");
  factorize->add_option("integrals", integrals_path)->required();
  auto* tf = factorize->add_option("--tol-first", tol_first, "First-stage tolerance (Ha)");
  auto* ts = factorize->add_option("--tol-second", tol_second, "Second-stage tolerance (Ha)");
  auto* fe = factorize->add_option("--eps", eps, "Pick tolerances for this accuracy (Ha)");
  fe->excludes(tf)->excludes(ts);

  std::string df_path;
  double logical_eps = 0.0, budget = 0.0;
  auto* est_logical = app.add_subcommand("estimate-logical", "Logical cost of a factorization");
  est_logical->add_option("df", df_path)->required();
  est_logical->add_option("--eps", logical_eps, "Total energy accuracy (Ha)");
  est_logical->add_option("--budget", budget, "Total failure probability");

  std::string from_logical, preset;
  std::uint64_t qubits = 0, tcount = 0;
  double tcount_value = 0.0;
  auto* est_physical = app.add_subcommand("estimate-physical", "Surface-code cost");
  auto* fl = est_physical->add_option("--from-logical", from_logical, "Logical estimate JSON");
  auto* oq = est_physical->add_option("--qubits", qubits, "Algorithmic logical qubits");
  auto* ot = est_physical->add_option("--tcount", tcount_value, "T count (4.0e10 is accepted)")
                 ->check(CLI::NonNegativeNumber);
  est_physical->add_option("--preset", preset, "Qubit preset name");
  fl->excludes(oq)->excludes(ot);
  oq->needs(ot);
  ot->needs(oq);

  std::string fixture;
  bool json = false;
  auto* reproduce = app.add_subcommand("reproduce-table", "Compare the model with a table");
  reproduce->add_option("fixture", fixture, "Table CSV (defaults to the bundled one)");
  reproduce->add_flag("--json", json, "Emit JSON rows instead of a comparison CSV");

  std::string scaling_path;
  auto* fit = app.add_subcommand("fit-scaling", "Log-log slope of t_count against n_orb");
  fit->add_option("csv", scaling_path)->required();

  std::string ledger_path;
  auto* fmo = app.add_subcommand("fmo-assemble", "FMO2 total energy from a ledger");
  fmo->add_option("ledger", ledger_path)->required();

  std::vector<double> energies;
  auto* binding = app.add_subcommand("binding-affinity", "E_complex - E_apo - E_ion");
  binding->add_option("energies", energies, "E_complex E_apo E_ion (Ha)")->required()->expected(3);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*parse_xyz) {
      std::cout << ingest::serialize_xyz(ingest::read_xyz_file(xyz_path));
    } else if (*factorize) {
      const auto integrals = ingest::read_integral_file(integrals_path);
      if (*fe) {
        const auto t = dfact::choose_tolerances(integrals, eps);
        tol_first = t.first;
        tol_second = t.second;
      }
      std::cout << dfact::to_json(dfact::factorize(integrals, tol_first, tol_second));
    } else if (*est_logical) {
      auto config = load(config_path);
      auto& est = config.estimation;
      if (logical_eps > 0.0) est.eps_total_energy = logical_eps;
      if (budget > 0.0) {
        est.error_budget = budget;
        est.budget_split = {budget / 3.0, budget / 3.0, budget - 2.0 * (budget / 3.0)};
      }
      const auto df = dfact::from_json(read_file(df_path));
      std::cout << pipeline::to_json(logical::estimate_logical(df, est));
    } else if (*est_physical) {
      auto config = load(config_path);
      if (!preset.empty()) config.qubits = physical::qubit_preset(preset);
      if (!from_logical.empty()) {
        std::tie(qubits, tcount) = pipeline::logical_totals_from_json(read_file(from_logical));
      } else if (!*oq) {
        throw Error(ErrorCategory::invalid_argument,
                    "give --from-logical or both --qubits and --tcount");
      } else {
        if (tcount_value != std::round(tcount_value) || tcount_value >= 0x1p64) {
          throw Error(ErrorCategory::invalid_argument, "--tcount must be a whole number");
        }
        tcount = static_cast<std::uint64_t>(tcount_value);
      }
      std::cout << pipeline::to_json(physical::estimate_physical(
          qubits, tcount, config.qubits, config.code, config.estimation));
    } else if (*reproduce) {
      const auto config = load(config_path);
      const auto rows =
          pipeline::load_table(fixture.empty() ? pipeline::default_table_path() : fixture);
      print_table(pipeline::reproduce_table(rows, config), json);
    } else if (*fit) {
      const auto points = pipeline::parse_scaling_csv(read_file(scaling_path));
      std::cout << format_double(pipeline::fit_scaling(points)) << '\n';
    } else if (*fmo) {
      const auto ledger = pipeline::parse_ledger(read_file(ledger_path));
      std::cout << format_double(pipeline::fmo_assemble(ledger)) << '\n';
    } else if (*binding) {
      const auto e = pipeline::binding_affinity(energies[0], energies[1], energies[2]);
      std::cout << "delta_e_hartree," << format_double(e.hartree) << '\n'
                << "delta_e_kj_per_mol," << format_double(e.kj_per_mol) << '\n';
    }
  } catch (const Error& e) {
    std::cerr << "error[" << to_string(e.category()) << "]: " << e.what() << '\n';
    return exit_code(e.category());
  } catch (const std::exception& e) {
    std::cerr << "error[internal]: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
