#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <utility>
#include <vector>

#include "qre/ingest/integrals.hpp"

namespace qre::verify {

/**
 * Qubitization walk operator for a real symmetric H with lambda >= ||H||.
 *
 * A = H / lambda is block-encoded by the dilation U = [[A, B], [B, -A]],
 * B = sqrt(I - A^2), and the walk is W = i R U with R = diag(I, -I). Every
 * eigenvalue a of A yields the eigenphases arcsin(a) and pi - arcsin(a).
 * The system occupies the first block, so |0>|v> is the embedding of v.
 *
 * invalid_argument if H is not square and symmetric (1e-12) or lambda is
 * below its spectral norm.
 */
Eigen::MatrixXcd build_walk_operator(const Eigen::MatrixXd& h, double lambda);

struct WalkSpectrumReport {
  double lambda = 0.0;
  /// (E_k, theta_k) with theta in (-pi, pi]; two entries per eigenvalue.
  std::vector<std::pair<double, double>> pairs;
  double max_residual = 0.0;  ///< max |sin theta_k - E_k / lambda|
};

/// Eigenphases of the walk matched against the spectrum of H.
WalkSpectrumReport walk_spectrum(const Eigen::MatrixXd& h, double lambda);

/// Eigenphases of a unitary in (-pi, pi], ascending.
std::vector<double> eigenphases(const Eigen::MatrixXcd& u);

}  // namespace qre::verify
