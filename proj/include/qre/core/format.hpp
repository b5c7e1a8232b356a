#pragma once

#include <optional>
#include <string>
#include <string_view>

namespace qre {

/// Shortest decimal string that parses back to exactly `value`.
std::string format_double(double value);

/// Strict full-string parse; rejects trailing garbage and non-finite text.
std::optional<double> parse_double(std::string_view text);

std::optional<long long> parse_integer(std::string_view text);

std::string_view trim(std::string_view text);

}  // namespace qre
