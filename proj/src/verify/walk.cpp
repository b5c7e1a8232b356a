#include "qre/verify/walk.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>

#include "qre/core/error.hpp"

namespace qre::verify {

namespace {

Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> checked_eigen(const Eigen::MatrixXd& h) {
  if (h.rows() != h.cols() || h.rows() == 0) {
    throw Error(ErrorCategory::invalid_argument, "H must be a non-empty square matrix");
  }
  if ((h - h.transpose()).cwiseAbs().maxCoeff() > 1e-12) {
    throw Error(ErrorCategory::invalid_argument, "H must be symmetric");
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(h);
  if (solver.info() != Eigen::Success) {
    throw Error(ErrorCategory::numerical_failure, "symmetric eigensolve failed");
  }
  return solver;
}

}  // namespace

Eigen::MatrixXcd build_walk_operator(const Eigen::MatrixXd& h, double lambda) {
  const auto solver = checked_eigen(h);
  const Eigen::VectorXd& e = solver.eigenvalues();
  const double norm = e.cwiseAbs().maxCoeff();
  if (!(lambda > 0.0 || norm == 0.0) || lambda < norm * (1.0 - 1e-12)) {
    throw Error(ErrorCategory::invalid_argument, "lambda is below the norm of H");
  }
  const double scale = lambda > 0.0 ? lambda : 1.0;
  const Eigen::MatrixXd& v = solver.eigenvectors();
  const Eigen::VectorXd a = (e / scale).cwiseMax(-1.0).cwiseMin(1.0);
  const Eigen::VectorXd b = (1.0 - a.array().square()).cwiseMax(0.0).sqrt();

  const Eigen::Index n = h.rows();
  const Eigen::MatrixXd top = v * a.asDiagonal() * v.transpose();
  const Eigen::MatrixXd off = v * b.asDiagonal() * v.transpose();
  Eigen::MatrixXd ru(2 * n, 2 * n);
  ru << top, off, -off, top;
  return std::complex<double>(0.0, 1.0) * ru.cast<std::complex<double>>();
}

std::vector<double> eigenphases(const Eigen::MatrixXcd& u) {
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(u, false);
  if (solver.info() != Eigen::Success) {
    throw Error(ErrorCategory::numerical_failure, "unitary eigensolve failed");
  }
  std::vector<double> phases;
  phases.reserve(static_cast<std::size_t>(u.rows()));
  for (const auto& z : solver.eigenvalues()) {
    double t = std::arg(z);
    if (t <= -std::numbers::pi) t += 2.0 * std::numbers::pi;
    phases.push_back(t);
  }
  std::sort(phases.begin(), phases.end());
  return phases;
}

WalkSpectrumReport walk_spectrum(const Eigen::MatrixXd& h, double lambda) {
  const auto w = build_walk_operator(h, lambda);
  const auto solver = checked_eigen(h);
  WalkSpectrumReport report;
  report.lambda = lambda;

  auto phases = eigenphases(w);
  std::sort(phases.begin(), phases.end(),
            [](double x, double y) { return std::sin(x) < std::sin(y); });
  std::vector<double> energies;
  for (double e : solver.eigenvalues()) {
    energies.push_back(e);
    energies.push_back(e);
  }
  std::sort(energies.begin(), energies.end());

  const double scale = lambda > 0.0 ? lambda : 1.0;
  for (std::size_t k = 0; k < phases.size(); ++k) {
    report.pairs.emplace_back(energies[k], phases[k]);
    report.max_residual =
        std::max(report.max_residual, std::abs(std::sin(phases[k]) - energies[k] / scale));
  }
  return report;
}

}  // namespace qre::verify
