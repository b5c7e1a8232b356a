#include "qre/dfact/double_factorization.hpp"

#include <algorithm>
#include <cmath>
#include <exception>

#include "qre/core/error.hpp"
#include "qre/dfact/jacobi.hpp"

namespace qre::dfact {

namespace {

constexpr double kNumericalZero = 1e-12;
constexpr double kSymmetryTolerance = 1e-12;

using ingest::pair_count;
using ingest::pair_index;

struct Truncation {
  std::size_t kept = 0;
  double discarded_l1 = 0.0;
  double discarded_l2sq = 0.0;
};

// values are sorted by |v| non-increasing. Drops numerical zeros, then the
// smallest-magnitude entries while the cumulative |v| stays within `tol`.
Truncation truncate(const std::vector<double>& values, double tol) {
  Truncation t;
  t.kept = values.size();
  const double scale = values.empty() ? 0.0 : std::abs(values.front());
  const double zero = kNumericalZero * std::max(1.0, scale);
  while (t.kept > 0) {
    const double v = std::abs(values[t.kept - 1]);
    const bool noise = v <= zero;
    if (!noise && !(t.discarded_l1 + v <= tol)) break;
    t.discarded_l1 += v;
    t.discarded_l2sq += v * v;
    --t.kept;
  }
  return t;
}

DFLeaf second_stage(const std::vector<double>& leaf_mat, std::size_t n,
                    double weight, double tol_second) {
  const auto eig = jacobi_eigen(leaf_mat, n);
  const auto cut = truncate(eig.values, tol_second);
  DFLeaf leaf;
  leaf.weight = weight;
  leaf.eigvals.assign(eig.values.begin(), eig.values.begin() + cut.kept);
  leaf.vecs.assign(eig.vectors.begin(), eig.vectors.begin() + cut.kept * n);
  leaf.discarded_norm = std::sqrt(cut.discarded_l2sq);
  return leaf;
}

}  // namespace

std::size_t DFDecomposition::total_rank() const noexcept {
  std::size_t total = 0;
  for (const auto& leaf : leaves) total += leaf.rank();
  return total;
}

DFDecomposition factorize(const ingest::IntegralSet& integrals, double tol_first,
                          double tol_second, Execution execution) {
  if (std::isnan(tol_first) || std::isnan(tol_second) || tol_first < 0.0 ||
      tol_second < 0.0) {
    throw Error(ErrorCategory::invalid_argument,
                "tolerances must be non-negative");
  }
  if (ingest::h1_asymmetry(integrals) > kSymmetryTolerance) {
    throw Error(ErrorCategory::asymmetric_input, "h1 is not symmetric");
  }
  const std::size_t n = integrals.n_orb();
  const std::size_t np = pair_count(n);

  DFDecomposition df;
  df.n_orb = n;
  df.core_energy = integrals.core_energy;
  df.tol_first = tol_first;
  df.tol_second = tol_second;

  df.h_bar.resize(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      double correction = 0.0;
      for (std::size_t l = 0; l < n; ++l) correction += integrals.eri(i, l, l, j);
      df.h_bar[i * n + j] = integrals.h1(i, j) - 0.5 * correction;
    }
  for (double x : df.h_bar)
    if (!std::isfinite(x))
      throw Error(ErrorCategory::numerical_failure, "non-finite one-body term");

  // Stage 1 on the weighted pair matrix W_ab = w_a w_b V_ab.
  std::vector<double> pair_weight(np);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j <= i; ++j)
      pair_weight[pair_index(i, j)] = i == j ? 1.0 : std::sqrt(2.0);
  std::vector<double> w(np * np);
  for (std::size_t a = 0; a < np; ++a)
    for (std::size_t b = 0; b < np; ++b)
      w[a * np + b] = pair_weight[a] * pair_weight[b] * integrals.pair_element(a, b);

  const auto first = jacobi_eigen(w, np);
  const auto cut = truncate(first.values, tol_first);
  df.discarded_first = cut.discarded_l1;

  std::vector<std::vector<double>> leaf_mats(cut.kept, std::vector<double>(n * n));
  for (std::size_t r = 0; r < cut.kept; ++r) {
    const auto u = first.vector(r);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        const std::size_t ab = pair_index(i, j);
        leaf_mats[r][i * n + j] = u[ab] / pair_weight[ab];
      }
  }

  df.leaves.resize(cut.kept);
  if (execution == Execution::serial) {
    for (std::size_t r = 0; r < cut.kept; ++r)
      df.leaves[r] = second_stage(leaf_mats[r], n, first.values[r], tol_second);
  } else {
    std::exception_ptr failure;
    const auto count = static_cast<long long>(cut.kept);
#pragma omp parallel for schedule(dynamic)
    for (long long r = 0; r < count; ++r) {
      try {
        df.leaves[r] = second_stage(leaf_mats[r], n, first.values[r], tol_second);
      } catch (...) {
#pragma omp critical(qre_dfact_failure)
        if (!failure) failure = std::current_exception();
      }
    }
    if (failure) std::rethrow_exception(failure);
  }

  // Leaves whose every eigenpair was dropped carry no operator.
  df.leaves.erase(std::remove_if(df.leaves.begin(), df.leaves.end(),
                                 [&](const DFLeaf& leaf) {
                                   if (leaf.rank() > 0) return false;
                                   df.discarded_first += std::abs(leaf.weight);
                                   return true;
                                 }),
                  df.leaves.end());
  return df;
}

std::vector<double> leaf_matrix(const DFLeaf& leaf, std::size_t n) {
  std::vector<double> out(n * n, 0.0);
  for (std::size_t m = 0; m < leaf.rank(); ++m) {
    const double lam = leaf.eigvals[m];
    const double* r = leaf.vecs.data() + m * n;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) out[i * n + j] += lam * r[i] * r[j];
  }
  return out;
}

std::vector<double> reconstruct(const DFDecomposition& df) {
  const std::size_t n = df.n_orb;
  const std::size_t n2 = n * n;
  std::vector<double> out(n2 * n2, 0.0);
  for (const auto& leaf : df.leaves) {
    const auto l = leaf_matrix(leaf, n);
    for (std::size_t ij = 0; ij < n2; ++ij) {
      const double lij = leaf.weight * l[ij];
      for (std::size_t kl = 0; kl < n2; ++kl) out[ij * n2 + kl] += lij * l[kl];
    }
  }
  return out;
}

double pair_matrix_error_bound(const DFDecomposition& df) {
  double bound = df.discarded_first;
  for (const auto& leaf : df.leaves) {
    double kept_sq = 0.0;
    for (double v : leaf.eigvals) kept_sq += v * v;
    bound += std::abs(leaf.weight) * leaf.discarded_norm * (1.0 + std::sqrt(kept_sq));
  }
  return bound;
}

double fock_space_error_bound(const DFDecomposition& df) {
  return 2.0 * static_cast<double>(df.n_orb) * pair_matrix_error_bound(df);
}

std::vector<double> shifted_one_body(const DFDecomposition& df) {
  const std::size_t n = df.n_orb;
  std::vector<double> out = df.h_bar;
  for (const auto& leaf : df.leaves) {
    double trace = 0.0;
    for (double v : leaf.eigvals) trace += v;
    const auto l = leaf_matrix(leaf, n);
    for (std::size_t k = 0; k < n * n; ++k) out[k] += leaf.weight * trace * l[k];
  }
  return out;
}

double identity_shift(const DFDecomposition& df) {
  const std::size_t n = df.n_orb;
  const auto h = shifted_one_body(df);
  double shift = 0.0;
  for (std::size_t i = 0; i < n; ++i) shift += h[i * n + i];
  for (const auto& leaf : df.leaves) {
    double trace = 0.0;
    for (double v : leaf.eigvals) trace += v;
    shift -= 0.5 * leaf.weight * trace * trace;
  }
  return shift;
}

LambdaNorms lambda_norms(const DFDecomposition& df) {
  LambdaNorms out;
  if (df.n_orb > 0) {
    const auto eig = jacobi_eigen(shifted_one_body(df), df.n_orb);
    for (double v : eig.values) out.one_body += std::abs(v);
  }
  for (const auto& leaf : df.leaves) {
    double l1 = 0.0;
    for (double v : leaf.eigvals) l1 += std::abs(v);
    out.two_body += 0.25 * kSpinFactor * std::abs(leaf.weight) * l1 * l1;
  }
  out.total = out.one_body + out.two_body;
  return out;
}

Tolerances choose_tolerances(const ingest::IntegralSet& integrals,
                             double eps_target) {
  if (!(eps_target > 0.0)) {
    throw Error(ErrorCategory::invalid_argument, "eps_target must be positive");
  }
  if (std::isinf(eps_target)) {
    const double inf = std::numeric_limits<double>::infinity();
    return {inf, inf};
  }
  const std::size_t n = integrals.n_orb();
  const std::size_t np = pair_count(n);
  double frob_sq = 0.0;
  // Frobenius norm of the full n^2 x n^2 pair matrix (equals the weighted
  // packed one).
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) {
          const double v = integrals.eri(i, j, k, l);
          frob_sq += v * v;
        }
  const double trace_norm_bound = std::sqrt(static_cast<double>(np) * frob_sq);
  const double t = eps_target /
                   (4.0 * static_cast<double>(std::max<std::size_t>(n, 1)) *
                    (1.0 + 2.0 * trace_norm_bound));
  return {t, t};
}

}  // namespace qre::dfact
