#include "qre/ingest/integrals.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "qre/core/error.hpp"
#include "qre/core/format.hpp"

namespace qre::ingest {

namespace {

constexpr double kDuplicateTolerance = 1e-10;

std::vector<std::string_view> fields_of(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r'))
      ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r')
      ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

}  // namespace

IntegralSet::IntegralSet(std::size_t n_orb)
    : n_orb_(n_orb),
      h1_(n_orb * n_orb, 0.0),
      h2_(pair_count(pair_count(n_orb)), 0.0) {}

void IntegralSet::set_h1(std::size_t i, std::size_t j, double value) {
  h1_[i * n_orb_ + j] = value;
  h1_[j * n_orb_ + i] = value;
}

std::vector<double> IntegralSet::h2_dense() const {
  const std::size_t n = n_orb_;
  std::vector<double> out(n * n * n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l)
          out[((i * n + j) * n + k) * n + l] = eri(i, j, k, l);
  return out;
}

IntegralSet IntegralSet::from_dense(std::size_t n_orb, double core,
                                    const std::vector<double>& h1,
                                    const std::vector<double>& h2, double tol) {
  const std::size_t n = n_orb;
  if (h1.size() != n * n || h2.size() != n * n * n * n) {
    throw Error(ErrorCategory::invalid_argument,
                "dense integral arrays do not match n_orb");
  }
  IntegralSet out(n);
  out.core_energy = core;
  out.h1_ = h1;
  auto at = [&](std::size_t i, std::size_t j, std::size_t k, std::size_t l) {
    return h2[((i * n + j) * n + k) * n + l];
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) {
          const double v = at(i, j, k, l);
          const double images[] = {at(j, i, k, l), at(i, j, l, k), at(j, i, l, k),
                                   at(k, l, i, j), at(l, k, i, j), at(k, l, j, i),
                                   at(l, k, j, i)};
          for (double w : images) {
            if (!(std::abs(v - w) <= tol)) {
              throw Error(ErrorCategory::asymmetric_input,
                          "two-electron tensor violates 8-fold symmetry");
            }
          }
          out.set_eri(i, j, k, l, v);
        }
  return out;
}

double h1_asymmetry(const IntegralSet& integrals) {
  double worst = 0.0;
  const std::size_t n = integrals.n_orb();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j)
      worst = std::max(worst, std::abs(integrals.h1(i, j) - integrals.h1(j, i)));
  return worst;
}

double h2_symmetry_defect(const IntegralSet& integrals) {
  const std::size_t n = integrals.n_orb();
  const auto dense = integrals.h2_dense();
  auto at = [&](std::size_t i, std::size_t j, std::size_t k, std::size_t l) {
    return dense[((i * n + j) * n + k) * n + l];
  };
  double worst = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) {
          const double v = at(i, j, k, l);
          for (double w : {at(j, i, k, l), at(i, j, l, k), at(j, i, l, k),
                           at(k, l, i, j), at(l, k, i, j), at(k, l, j, i),
                           at(l, k, j, i)})
            worst = std::max(worst, std::abs(v - w));
        }
  return worst;
}

IntegralSet parse_integrals(std::string_view text) {
  std::size_t line_no = 0;
  std::size_t pos = 0;
  IntegralSet out;
  bool have_header = false;

  // Per-slot "already assigned" flags for duplicate detection.
  bool core_seen = false;
  std::vector<bool> h1_seen;
  std::vector<bool> h2_seen;

  while (pos <= text.size()) {
    auto end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view line = trim(text.substr(pos, end - pos));
    pos = end + 1;
    ++line_no;
    if (line.empty() || line.front() == '#') {
      if (end == text.size()) break;
      continue;
    }

    const auto f = fields_of(line);
    if (!have_header) {
      if (f.size() != 2 || f[0] != "NORB") {
        throw ParseError(ErrorCategory::missing_header, line_no,
                         "expected 'NORB <n>' header");
      }
      const auto n = parse_integer(f[1]);
      if (!n || *n <= 0) {
        throw ParseError(ErrorCategory::parse, line_no,
                         "NORB must be a positive integer");
      }
      out = IntegralSet(static_cast<std::size_t>(*n));
      h1_seen.assign(out.n_orb() * out.n_orb(), false);
      h2_seen.assign(out.h2_packed().size(), false);
      have_header = true;
      if (end == text.size()) break;
      continue;
    }

    if (f.size() != 5) {
      throw ParseError(ErrorCategory::parse, line_no,
                       "expected 'value i j k l'");
    }
    const auto value = parse_double(f[0]);
    if (!value) {
      throw ParseError(ErrorCategory::parse, line_no,
                       "non-numeric value '" + std::string(f[0]) + "'");
    }
    long long idx[4];
    for (int k = 0; k < 4; ++k) {
      const auto v = parse_integer(f[k + 1]);
      if (!v) {
        throw ParseError(ErrorCategory::parse, line_no,
                         "non-integer index '" + std::string(f[k + 1]) + "'");
      }
      idx[k] = *v;
    }
    const long long n = static_cast<long long>(out.n_orb());
    auto check_range = [&](long long v) {
      if (v < 1 || v > n) {
        throw ParseError(ErrorCategory::index_range, line_no,
                         "index " + std::to_string(v) + " outside [1, " +
                             std::to_string(n) + "]");
      }
    };
    auto check_duplicate = [&](bool seen, double previous) {
      if (seen && std::abs(previous - *value) > kDuplicateTolerance) {
        throw ParseError(ErrorCategory::conflicting_duplicate, line_no,
                         "conflicting duplicate record");
      }
    };

    const bool kl_zero = idx[2] == 0 && idx[3] == 0;
    const bool ij_zero = idx[0] == 0 && idx[1] == 0;
    if (ij_zero && kl_zero) {
      check_duplicate(core_seen, out.core_energy);
      out.core_energy = *value;
      core_seen = true;
    } else if (kl_zero) {
      check_range(idx[0]);
      check_range(idx[1]);
      const auto i = static_cast<std::size_t>(idx[0] - 1);
      const auto j = static_cast<std::size_t>(idx[1] - 1);
      const std::size_t slot = std::min(i, j) * out.n_orb() + std::max(i, j);
      check_duplicate(h1_seen[slot], out.h1(i, j));
      out.set_h1(i, j, *value);
      h1_seen[slot] = true;
    } else {
      for (long long v : idx) check_range(v);
      const auto i = static_cast<std::size_t>(idx[0] - 1);
      const auto j = static_cast<std::size_t>(idx[1] - 1);
      const auto k = static_cast<std::size_t>(idx[2] - 1);
      const auto l = static_cast<std::size_t>(idx[3] - 1);
      const std::size_t slot = pair_index(pair_index(i, j), pair_index(k, l));
      check_duplicate(h2_seen[slot], out.eri(i, j, k, l));
      out.set_eri(i, j, k, l, *value);
      h2_seen[slot] = true;
    }
    if (end == text.size()) break;
  }

  if (!have_header) {
    throw ParseError(ErrorCategory::missing_header, 0,
                     "integral file has no 'NORB <n>' header");
  }
  return out;
}

std::string serialize_integrals(const IntegralSet& integrals) {
  std::ostringstream out;
  const std::size_t n = integrals.n_orb();
  out << "NORB " << n << '\n';
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j <= i; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l <= k; ++l) {
          if (pair_index(k, l) > pair_index(i, j)) continue;
          const double v = integrals.eri(i, j, k, l);
          if (v == 0.0) continue;
          out << format_double(v) << ' ' << i + 1 << ' ' << j + 1 << ' '
              << k + 1 << ' ' << l + 1 << '\n';
        }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j <= i; ++j) {
      const double v = integrals.h1(i, j);
      if (v == 0.0) continue;
      out << format_double(v) << ' ' << i + 1 << ' ' << j + 1 << " 0 0\n";
    }
  out << format_double(integrals.core_energy) << " 0 0 0 0\n";
  return out.str();
}

IntegralSet read_integral_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCategory::io, "cannot open '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_integrals(buffer.str());
}

}  // namespace qre::ingest
