#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "qre/pipeline/config.hpp"
#include "qre/pipeline/report.hpp"

namespace qre::pipeline {

struct Tolerance {
  double qubits_rel = 0.02;
  double runtime_rel = 0.10;
  long long factories_abs = 2;
};

struct RowComparison {
  ReportRow expected;
  physical::PhysicalEstimate computed;
  bool distance_ok = false;
  double qubits_rel_error = 0.0;
  /// Only judged on rows whose distance matches; false otherwise.
  bool qubits_ok = false;
  double runtime_rel_error = 0.0;
  bool runtime_ok = false;
  long long factory_diff = 0;
  bool factories_ok = false;
};

struct TableComparison {
  std::vector<RowComparison> rows;
  std::size_t distance_matches = 0;
  std::size_t qubit_matches = 0;
  std::size_t runtime_matches = 0;
  std::size_t factory_matches = 0;
};

/// Bundled fixture path (set at build time).
std::string default_table_path();

/// Parses a table fixture; io error when the file is missing.
std::vector<ReportRow> load_table(const std::string& path);

enum class Execution { serial, parallel };

/// Runs estimate_physical on (n_logical, t_count) of every row and compares
/// against the recorded columns. Rows are independent and may run in
/// parallel; the result is ordered like the input.
TableComparison reproduce_table(const std::vector<ReportRow>& rows, const Config& config,
                                const Tolerance& tolerance = {},
                                Execution execution = Execution::parallel);

}  // namespace qre::pipeline
