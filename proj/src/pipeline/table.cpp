#include "qre/pipeline/table.hpp"

#include <cmath>
#include <exception>
#include <fstream>
#include <sstream>

#include "qre/core/error.hpp"

#ifndef QRE_DATA_DIR
#define QRE_DATA_DIR "data"
#endif

namespace qre::pipeline {

std::string default_table_path() { return std::string(QRE_DATA_DIR) + "/resource_table.csv"; }

std::vector<ReportRow> load_table(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCategory::io, "cannot open table fixture: " + path);
  std::ostringstream text;
  text << in.rdbuf();
  return parse_report_csv(text.str());
}

namespace {

RowComparison compare(const ReportRow& row, const Config& config, const Tolerance& tol) {
  RowComparison c;
  c.expected = row;
  c.computed = physical::estimate_physical(row.n_logical, row.t_count, config.qubits,
                                           config.code, config.estimation);
  c.distance_ok = c.computed.distance == row.distance;
  c.qubits_rel_error = std::abs(static_cast<double>(c.computed.n_physical_qubits) /
                                    static_cast<double>(row.n_physical) -
                                1.0);
  c.qubits_ok = c.distance_ok && c.qubits_rel_error <= tol.qubits_rel;
  c.runtime_rel_error = std::abs(c.computed.runtime / row.runtime_s - 1.0);
  c.runtime_ok = c.runtime_rel_error <= tol.runtime_rel;
  c.factory_diff = static_cast<long long>(c.computed.n_factories) -
                   static_cast<long long>(row.n_factories);
  c.factories_ok = std::llabs(c.factory_diff) <= tol.factories_abs;
  return c;
}

}  // namespace

TableComparison reproduce_table(const std::vector<ReportRow>& rows, const Config& config,
                                const Tolerance& tolerance, Execution execution) {
  TableComparison out;
  out.rows.resize(rows.size());
  const auto count = static_cast<long long>(rows.size());
  if (execution == Execution::serial) {
    for (long long i = 0; i < count; ++i) out.rows[i] = compare(rows[i], config, tolerance);
  } else {
    std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic)
    for (long long i = 0; i < count; ++i) {
      try {
        out.rows[i] = compare(rows[i], config, tolerance);
      } catch (...) {
#pragma omp critical(qre_table_failure)
        if (!failure) failure = std::current_exception();
      }
    }
    if (failure) std::rethrow_exception(failure);
  }
  for (const auto& r : out.rows) {
    out.distance_matches += r.distance_ok;
    out.qubit_matches += r.qubits_ok;
    out.runtime_matches += r.runtime_ok;
    out.factory_matches += r.factories_ok;
  }
  return out;
}

}  // namespace qre::pipeline
