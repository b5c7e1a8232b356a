#include "qre/core/error.hpp"

namespace qre {

std::string_view to_string(ErrorCategory category) {
  switch (category) {
    case ErrorCategory::parse: return "parse";
    case ErrorCategory::empty_input: return "empty_input";
    case ErrorCategory::index_range: return "index_range";
    case ErrorCategory::conflicting_duplicate: return "conflicting_duplicate";
    case ErrorCategory::missing_header: return "missing_header";
    case ErrorCategory::invalid_argument: return "invalid_argument";
    case ErrorCategory::asymmetric_input: return "asymmetric_input";
    case ErrorCategory::numerical_failure: return "numerical_failure";
    case ErrorCategory::resource_limit: return "resource_limit";
    case ErrorCategory::saturation: return "saturation";
    case ErrorCategory::unreachable_budget: return "unreachable_budget";
    case ErrorCategory::non_unitary: return "non_unitary";
    case ErrorCategory::io: return "io";
    case ErrorCategory::config: return "config";
  }
  return "unknown";
}

int exit_code(ErrorCategory category) {
  return 10 + static_cast<int>(category);
}

Error::Error(ErrorCategory category, const std::string& message)
    : std::runtime_error(message), category_(category) {}

namespace {
std::string with_line(std::size_t line, const std::string& message) {
  if (line == 0) return message;
  return "line " + std::to_string(line) + ": " + message;
}
}  // namespace

ParseError::ParseError(ErrorCategory category, std::size_t line,
                       const std::string& message)
    : Error(category, with_line(line, message)), line_(line) {}

}  // namespace qre
