#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace qre::dfact {

/// Eigenpairs of a real symmetric matrix. `vectors` is row-major with one
/// eigenvector per row, aligned with `values`.
struct SymmetricEigen {
  std::size_t dim = 0;
  std::vector<double> values;
  std::vector<double> vectors;

  std::span<const double> vector(std::size_t k) const {
    return {vectors.data() + k * dim, dim};
  }
};

/**
 * Cyclic Jacobi eigensolver for a dense symmetric `dim` x `dim` matrix
 * (row-major; only symmetry within 1e-12 is assumed, the upper triangle is
 * mirrored from the lower).
 *
 * Sweeps until the off-diagonal Frobenius norm is <= 1e-12 times the
 * matrix Frobenius norm. Output is canonicalised: eigenpairs sorted by
 * |value| non-increasing (ties: larger value first, then lexicographically
 * larger vector), every vector's first component with |x| > 1e-12 positive.
 *
 * Throws numerical_failure on non-finite input or if 100 sweeps do not
 * converge.
 */
SymmetricEigen jacobi_eigen(std::span<const double> matrix, std::size_t dim);

}  // namespace qre::dfact
