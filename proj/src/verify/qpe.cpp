#include "qre/verify/qpe.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <numeric>
#include <random>

#include "qre/core/error.hpp"
#include "qre/dfact/double_factorization.hpp"
#include "qre/verify/fock.hpp"
#include "qre/verify/walk.hpp"

namespace qre::verify {

namespace {

using cd = std::complex<double>;
constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr unsigned kCircuitMaxBits = 10;

std::vector<double> circuit_distribution(const Eigen::MatrixXcd& u, const Eigen::VectorXcd& v,
                                         unsigned m) {
  const Eigen::Index n_out = Eigen::Index{1} << m;
  Eigen::MatrixXcd joint = v.replicate(1, n_out) / std::sqrt(static_cast<double>(n_out));
  Eigen::MatrixXcd power = u;
  for (unsigned j = 0; j < m; ++j) {
    for (Eigen::Index k = 0; k < n_out; ++k)
      if (k >> j & 1) joint.col(k) = power * joint.col(k);
    if (j + 1 < m) power = power * power;
  }
  Eigen::MatrixXcd iqft(n_out, n_out);
  const double norm = 1.0 / std::sqrt(static_cast<double>(n_out));
  for (Eigen::Index k = 0; k < n_out; ++k)
    for (Eigen::Index x = 0; x < n_out; ++x) {
      const auto kx = static_cast<double>((k * x) % n_out);
      iqft(k, x) = std::polar(norm, -kTwoPi * kx / static_cast<double>(n_out));
    }
  const Eigen::MatrixXcd out = joint * iqft;
  std::vector<double> probs(static_cast<std::size_t>(n_out));
  for (Eigen::Index x = 0; x < n_out; ++x) probs[x] = out.col(x).squaredNorm();
  return probs;
}

std::vector<double> spectral_distribution(const Eigen::MatrixXcd& u, const Eigen::VectorXcd& v,
                                          unsigned m) {
  Eigen::ComplexSchur<Eigen::MatrixXcd> schur(u);
  if (schur.info() != Eigen::Success) {
    throw Error(ErrorCategory::numerical_failure, "Schur decomposition failed");
  }
  const Eigen::VectorXcd coeff = schur.matrixU().adjoint() * v;
  const auto n_out = std::size_t{1} << m;
  const double big_n = static_cast<double>(n_out);
  std::vector<double> probs(n_out, 0.0);
  for (Eigen::Index j = 0; j < coeff.size(); ++j) {
    const double weight = std::norm(coeff(j));
    if (weight == 0.0) continue;
    double phi = std::arg(schur.matrixT()(j, j)) / kTwoPi;
    if (phi < 0.0) phi += 1.0;
    for (std::size_t x = 0; x < n_out; ++x) {
      const double delta = phi - static_cast<double>(x) / big_n;
      const double den = std::sin(std::numbers::pi * delta);
      double fejer = 1.0;
      if (std::abs(den) > 1e-15) {
        const double num = std::sin(std::numbers::pi * big_n * delta);
        fejer = num * num / (big_n * big_n * den * den);
      }
      probs[x] += weight * fejer;
    }
  }
  return probs;
}

}  // namespace

std::size_t QpeResult::mode() const {
  return static_cast<std::size_t>(std::max_element(counts.begin(), counts.end()) -
                                  counts.begin());
}

double QpeResult::phase(std::size_t outcome) const {
  return static_cast<double>(outcome) / static_cast<double>(std::size_t{1} << bits);
}

double QpeResult::mass_near(double phi, double radius) const {
  if (shots == 0) return 0.0;
  std::uint64_t hit = 0;
  for (std::size_t x = 0; x < counts.size(); ++x) {
    double d = std::abs(phase(x) - phi);
    d = std::min(d, 1.0 - d);
    if (d <= radius + 1e-15) hit += counts[x];
  }
  return static_cast<double>(hit) / static_cast<double>(shots);
}

QpeResult run_qpe(const Eigen::MatrixXcd& u, const Eigen::VectorXcd& state, unsigned m,
                  std::uint64_t shots, std::uint64_t seed, QpeMethod method) {
  if (u.rows() != u.cols() || u.rows() == 0 || u.rows() > 64) {
    throw Error(ErrorCategory::invalid_argument, "U must be square with dimension 1..64");
  }
  if (state.size() != u.rows()) {
    throw Error(ErrorCategory::invalid_argument, "state dimension does not match U");
  }
  if (m < 1 || m > 20) throw Error(ErrorCategory::invalid_argument, "bits must lie in 1..20");
  const Eigen::MatrixXcd defect =
      u.adjoint() * u - Eigen::MatrixXcd::Identity(u.rows(), u.cols());
  if (defect.norm() > 1e-10) throw Error(ErrorCategory::non_unitary, "U is not unitary");
  const double norm = state.norm();
  if (!(norm > 0.0)) throw Error(ErrorCategory::invalid_argument, "state must be non-zero");
  const Eigen::VectorXcd v = state / norm;

  if (method == QpeMethod::automatic) {
    method = m <= kCircuitMaxBits ? QpeMethod::circuit : QpeMethod::spectral;
  }
  QpeResult r;
  r.bits = m;
  r.shots = shots;
  r.probabilities =
      method == QpeMethod::circuit ? circuit_distribution(u, v, m) : spectral_distribution(u, v, m);

  std::vector<double> cdf(r.probabilities.size());
  std::partial_sum(r.probabilities.begin(), r.probabilities.end(), cdf.begin());
  const double total = cdf.back();
  r.counts.assign(r.probabilities.size(), 0);
  std::mt19937_64 rng(seed);
  for (std::uint64_t s = 0; s < shots; ++s) {
    const double target = static_cast<double>(rng() >> 11) * 0x1.0p-53 * total;
    auto it = std::upper_bound(cdf.begin(), cdf.end(), target);
    if (it == cdf.end()) --it;
    ++r.counts[static_cast<std::size_t>(it - cdf.begin())];
  }
  return r;
}

GroundStateEstimate qpe_ground_energy(const ingest::IntegralSet& integrals, unsigned m,
                                      std::uint64_t shots, std::uint64_t seed) {
  const auto fock = build_fock_matrix(integrals);
  if (2 * fock.dim() > 64) {
    throw Error(ErrorCategory::resource_limit, "walk operator would exceed dimension 64");
  }
  const auto df = dfact::factorize(integrals);
  GroundStateEstimate g;
  g.lambda = dfact::lambda_norms(df).total;
  g.offset = df.core_energy + dfact::identity_shift(df);

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(fock.entries);
  g.exact = solver.eigenvalues()(0);

  const auto dim = static_cast<Eigen::Index>(fock.dim());
  const Eigen::MatrixXd shifted =
      fock.entries - g.offset * Eigen::MatrixXd::Identity(dim, dim);
  const auto walk = build_walk_operator(shifted, g.lambda);
  Eigen::VectorXcd start = Eigen::VectorXcd::Zero(2 * dim);
  start.head(dim) = solver.eigenvectors().col(0).cast<cd>();

  const auto result = run_qpe(walk, start, m, shots, seed);
  g.phase = result.phase(result.mode());
  g.energy = g.offset + g.lambda * std::sin(kTwoPi * g.phase);
  return g;
}

}  // namespace qre::verify
