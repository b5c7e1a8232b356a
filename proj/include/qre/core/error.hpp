#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace qre {

/// Machine-readable failure classes. The CLI maps each one to a distinct
/// exit code and prints the tag from to_string().
enum class ErrorCategory {
  parse,
  empty_input,
  index_range,
  conflicting_duplicate,
  missing_header,
  invalid_argument,
  asymmetric_input,
  numerical_failure,
  resource_limit,
  saturation,
  unreachable_budget,
  non_unitary,
  io,
  config,
};

std::string_view to_string(ErrorCategory category);

/// Exit code used by the command-line tool for a given category (always > 1).
int exit_code(ErrorCategory category);

class Error : public std::runtime_error {
 public:
  Error(ErrorCategory category, const std::string& message);

  ErrorCategory category() const noexcept { return category_; }

 private:
  ErrorCategory category_;
};

/// Parse failure that remembers the 1-based source line (0 when unknown).
class ParseError : public Error {
 public:
  ParseError(ErrorCategory category, std::size_t line,
             const std::string& message);

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace qre
