#include "qre/pipeline/scaling.hpp"

#include <cmath>
#include <sstream>
#include <string>

#include "qre/core/error.hpp"
#include "qre/core/format.hpp"

namespace qre::pipeline {

double fit_scaling(const std::vector<std::pair<double, double>>& points) {
  if (points.size() < 2) {
    throw Error(ErrorCategory::invalid_argument, "need at least two points");
  }
  double mx = 0.0, my = 0.0;
  for (const auto& [n, t] : points) {
    if (!(n > 0.0 && t > 0.0)) {
      throw Error(ErrorCategory::invalid_argument, "points must be positive");
    }
    mx += std::log(n);
    my += std::log(t);
  }
  const double k = static_cast<double>(points.size());
  mx /= k;
  my /= k;
  double sxx = 0.0, sxy = 0.0;
  for (const auto& [n, t] : points) {
    const double dx = std::log(n) - mx;
    sxx += dx * dx;
    sxy += dx * (std::log(t) - my);
  }
  if (sxx == 0.0) throw Error(ErrorCategory::invalid_argument, "abscissae are all equal");
  return sxy / sxx;
}

std::vector<std::pair<double, double>> parse_scaling_csv(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t line_no = 0;
  long n_col = -1, t_col = -1;
  bool header = false;
  std::vector<std::pair<double, double>> out;
  while (std::getline(in, raw)) {
    ++line_no;
    const auto line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    std::vector<std::string> f;
    std::istringstream fields{std::string(line)};
    for (std::string cell; std::getline(fields, cell, ',');) f.emplace_back(trim(cell));
    if (!header) {
      for (std::size_t i = 0; i < f.size(); ++i) {
        if (f[i] == "n_orb") n_col = static_cast<long>(i);
        if (f[i] == "t_count") t_col = static_cast<long>(i);
      }
      if (n_col < 0 || t_col < 0) {
        throw ParseError(ErrorCategory::missing_header, line_no,
                         "header must name n_orb and t_count");
      }
      header = true;
      continue;
    }
    const auto need = static_cast<std::size_t>(std::max(n_col, t_col));
    if (f.size() <= need) throw ParseError(ErrorCategory::parse, line_no, "too few fields");
    const auto n = parse_double(f[n_col]);
    const auto t = parse_double(f[t_col]);
    if (!n || !t) throw ParseError(ErrorCategory::parse, line_no, "non-numeric field");
    out.emplace_back(*n, *t);
  }
  if (!header) throw Error(ErrorCategory::missing_header, "scaling CSV has no header");
  return out;
}

}  // namespace qre::pipeline
