#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qre/logical/logical_cost.hpp"
#include "qre/physical/physical_cost.hpp"

namespace qre::pipeline {

struct ReportRow {
  std::string fragment;
  std::string basis;
  std::uint64_t n_orb = 0;
  std::uint64_t n_logical = 0;
  std::uint64_t t_count = 0;
  int distance = 0;
  std::uint64_t n_physical = 0;
  std::uint64_t n_factories = 0;
  std::uint64_t factory_qubits_total = 0;
  double runtime_s = 0.0;

  bool operator==(const ReportRow&) const = default;
};

/// Row from a logical and a physical estimate.
ReportRow make_row(std::string fragment, std::string basis,
                   const logical::LogicalEstimate& logical,
                   const physical::PhysicalEstimate& physical);

/// Column names in order.
const std::vector<std::string>& report_columns();

/// Header plus one line per row; numbers in shortest round-trip form.
std::string to_csv(const std::vector<ReportRow>& rows);
std::string to_json(const std::vector<ReportRow>& rows);

/**
 * Reads a report CSV: '#' comment lines, a header naming the columns of
 * report_columns() (any order), then data rows. Integer columns accept
 * scientific notation ("4.00e10") and are rounded to the nearest integer.
 */
std::vector<ReportRow> parse_report_csv(std::string_view text);

std::string to_json(const logical::LogicalEstimate& estimate);
std::string to_json(const physical::PhysicalEstimate& estimate);

/// (n_logical_qubits, t_count) from the JSON written for a LogicalEstimate.
std::pair<std::uint64_t, std::uint64_t> logical_totals_from_json(std::string_view text);

}  // namespace qre::pipeline
