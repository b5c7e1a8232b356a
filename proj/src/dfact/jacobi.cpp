#include "qre/dfact/jacobi.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "qre/core/error.hpp"

namespace qre::dfact {

namespace {

constexpr double kRelativeTolerance = 1e-12;
constexpr double kSignThreshold = 1e-12;
constexpr int kMaxSweeps = 100;

double off_diagonal_norm(const std::vector<double>& a, std::size_t n) {
  double sum = 0.0;
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = p + 1; q < n; ++q) sum += 2.0 * a[p * n + q] * a[p * n + q];
  return std::sqrt(sum);
}

}  // namespace

SymmetricEigen jacobi_eigen(std::span<const double> matrix, std::size_t dim) {
  const std::size_t n = dim;
  if (matrix.size() != n * n) {
    throw Error(ErrorCategory::invalid_argument, "matrix size does not match dim");
  }
  std::vector<double> a(n * n);
  double frob = 0.0;
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q <= p; ++q) {
      const double v = matrix[p * n + q];
      if (!std::isfinite(v)) {
        throw Error(ErrorCategory::numerical_failure, "non-finite matrix entry");
      }
      a[p * n + q] = v;
      a[q * n + p] = v;
      frob += (p == q ? 1.0 : 2.0) * v * v;
    }
  frob = std::sqrt(frob);

  std::vector<double> v(n * n, 0.0);
  for (std::size_t p = 0; p < n; ++p) v[p * n + p] = 1.0;

  const double target = kRelativeTolerance * frob;
  int sweep = 0;
  while (off_diagonal_norm(a, n) > target) {
    if (++sweep > kMaxSweeps) {
      throw Error(ErrorCategory::numerical_failure, "Jacobi did not converge");
    }
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a[p * n + q];
        if (apq == 0.0) continue;
        const double app = a[p * n + p];
        const double aqq = a[q * n + q];
        const double theta = (aqq - app) / (2.0 * apq);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;

        for (std::size_t k = 0; k < n; ++k) {
          const double akp = a[k * n + p];
          const double akq = a[k * n + q];
          a[k * n + p] = c * akp - s * akq;
          a[k * n + q] = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = a[p * n + k];
          const double aqk = a[q * n + k];
          a[p * n + k] = c * apk - s * aqk;
          a[q * n + k] = s * apk + c * aqk;
        }
        a[p * n + q] = 0.0;
        a[q * n + p] = 0.0;
        a[p * n + p] = app - t * apq;
        a[q * n + q] = aqq + t * apq;

        for (std::size_t k = 0; k < n; ++k) {
          const double vkp = v[k * n + p];
          const double vkq = v[k * n + q];
          v[k * n + p] = c * vkp - s * vkq;
          v[k * n + q] = s * vkp + c * vkq;
        }
      }
    }
  }

  // Columns of v are eigenvectors; transpose into rows and canonicalise.
  SymmetricEigen out;
  out.dim = n;
  std::vector<std::vector<double>> vecs(n, std::vector<double>(n));
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) vecs[k][i] = v[i * n + k];
    for (double x : vecs[k]) {
      if (std::abs(x) > kSignThreshold) {
        if (x < 0.0)
          for (double& y : vecs[k]) y = -y;
        break;
      }
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    const double ax = std::abs(a[x * n + x]);
    const double ay = std::abs(a[y * n + y]);
    if (ax != ay) return ax > ay;
    if (a[x * n + x] != a[y * n + y]) return a[x * n + x] > a[y * n + y];
    return vecs[x] > vecs[y];
  });

  out.values.reserve(n);
  out.vectors.reserve(n * n);
  for (std::size_t k : order) {
    out.values.push_back(a[k * n + k]);
    out.vectors.insert(out.vectors.end(), vecs[k].begin(), vecs[k].end());
  }
  return out;
}

}  // namespace qre::dfact
