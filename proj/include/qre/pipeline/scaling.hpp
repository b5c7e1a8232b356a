#pragma once

#include <string_view>
#include <utility>
#include <vector>

namespace qre::pipeline {

/// Least-squares slope of log(t) against log(n) over (n, t) points.
/// invalid_argument for fewer than two points, non-positive values, or
/// all abscissae equal.
double fit_scaling(const std::vector<std::pair<double, double>>& points);

/// (n_orb, t_count) pairs from a CSV with a header containing those two
/// columns; '#' lines are skipped.
std::vector<std::pair<double, double>> parse_scaling_csv(std::string_view text);

}  // namespace qre::pipeline
