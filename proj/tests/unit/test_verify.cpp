#include <gtest/gtest.h>

#include <algorithm>
#include <bit>
#include <cmath>
#include <complex>
#include <numbers>

#include "oracles.hpp"
#include "qre/core/error.hpp"
#include "qre/dfact/double_factorization.hpp"
#include "qre/ingest/synthetic.hpp"
#include "qre/verify/fock.hpp"
#include "qre/verify/qpe.hpp"
#include "qre/verify/walk.hpp"

using namespace qre;
using namespace qre::verify;
using std::numbers::pi;

namespace {

std::vector<double> sorted_eigenvalues(const Eigen::MatrixXd& m) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m, Eigen::EigenvaluesOnly);
  return {es.eigenvalues().data(), es.eigenvalues().data() + es.eigenvalues().size()};
}

ingest::IntegralSet small_system(std::size_t n, unsigned seed) {
  auto I = ingest::gen_synthetic({n, ingest::pair_count(n), 0.5, seed});
  const auto h = oracle::random_symmetric(static_cast<Eigen::Index>(n), seed + 17);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) I.set_h1(i, j, h(i, j));
  I.core_energy = 0.1 * seed;
  return I;
}

Eigen::VectorXcd basis_state(Eigen::Index dim, Eigen::Index k) {
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(dim);
  v(k) = 1.0;
  return v;
}

}  // namespace

TEST(Fock, SingleOrbitalHubbard) {
  ingest::IntegralSet I(1);
  I.set_h1(0, 0, -0.8);
  I.set_eri(0, 0, 0, 0, 0.6);
  const auto f = build_fock_matrix(I);
  ASSERT_EQ(f.dim(), 4u);
  const auto ev = sorted_eigenvalues(f.entries);
  std::vector<double> expect = {0.0, -0.8, -0.8, -1.6 + 0.6};
  std::sort(expect.begin(), expect.end());
  for (std::size_t k = 0; k < 4; ++k) EXPECT_NEAR(ev[k], expect[k], 1e-14);
}

TEST(Fock, CoreEnergyIsIdentity) {
  ingest::IntegralSet I(2);
  I.core_energy = 1.5;
  const auto f = build_fock_matrix(I);
  EXPECT_LT((f.entries - 1.5 * Eigen::MatrixXd::Identity(16, 16)).norm(), 1e-15);
}

TEST(Fock, HermitianNumberConservingAndDeterministic) {
  for (unsigned seed = 1; seed <= 4; ++seed) {
    const auto I = small_system(1 + seed % 3, seed);
    const auto par = build_fock_matrix(I, Execution::parallel);
    const auto ser = build_fock_matrix(I, Execution::serial);
    EXPECT_EQ(par.entries, ser.entries);
    EXPECT_LT((par.entries - par.entries.transpose()).norm(), 1e-13);
    const auto num = number_operator(I.n_orb());
    EXPECT_LT((par.entries * num - num * par.entries).norm(), 1e-12);
  }
}

TEST(Fock, OneBodyOperatorSpectrum) {
  // Single-particle sector of sum m_ij a+_i a_j carries the eigenvalues of m twice.
  const auto m = oracle::random_symmetric(3, 5);
  const auto op = one_body_operator(std::vector<double>(m.data(), m.data() + 9), 3);
  std::vector<Eigen::Index> singles;
  for (Eigen::Index s = 0; s < op.rows(); ++s)
    if (std::popcount(static_cast<unsigned>(s)) == 1) singles.push_back(s);
  Eigen::MatrixXd block(singles.size(), singles.size());
  for (std::size_t a = 0; a < singles.size(); ++a)
    for (std::size_t b = 0; b < singles.size(); ++b) block(a, b) = op(singles[a], singles[b]);
  auto got = sorted_eigenvalues(block);
  auto ref = sorted_eigenvalues(m);
  for (std::size_t k = 0; k < 3; ++k) {
    EXPECT_NEAR(got[2 * k], ref[k], 1e-12);
    EXPECT_NEAR(got[2 * k + 1], ref[k], 1e-12);
  }
}

TEST(Fock, TooLarge) {
  try {
    build_fock_matrix(ingest::IntegralSet(kMaxFockOrbitals + 1));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.category(), ErrorCategory::resource_limit);
  }
}

TEST(Equivalence, ExactFactorizationMatchesFockSpace) {
  for (unsigned seed = 1; seed <= 12; ++seed) {
    const std::size_t n = 1 + seed % 3;
    const auto I = small_system(n, seed);
    EXPECT_LE(check_df_equivalence(I, dfact::factorize(I)), 1e-9) << seed;
  }
}

TEST(Equivalence, OmittedCorrectionIsDetected) {
  const auto I = small_system(3, 3);
  auto df = dfact::factorize(I);
  df.h_bar = I.h1_data();
  EXPECT_GT(check_df_equivalence(I, df), 1e-3);
}

TEST(Equivalence, Preconditions) {
  const auto I = small_system(2, 1);
  EXPECT_THROW(check_df_equivalence(I, dfact::factorize(small_system(3, 1))), Error);
  EXPECT_THROW(check_df_equivalence(small_system(4, 1), dfact::factorize(small_system(4, 1))),
               Error);
}

TEST(Walk, ZeroHamiltonian) {
  const auto r = walk_spectrum(Eigen::MatrixXd::Zero(2, 2), 1.0);
  EXPECT_LE(r.max_residual, 1e-12);
  for (double theta : eigenphases(build_walk_operator(Eigen::MatrixXd::Zero(2, 2), 1.0)))
    EXPECT_TRUE(std::abs(theta) < 1e-12 || std::abs(std::abs(theta) - pi) < 1e-12) << theta;
}

TEST(Walk, SingleEigenvalue) {
  const auto phases = eigenphases(build_walk_operator(Eigen::MatrixXd::Constant(1, 1, 0.5), 1.0));
  ASSERT_EQ(phases.size(), 2u);
  EXPECT_NEAR(phases[0], pi / 6, 1e-12);
  EXPECT_NEAR(phases[1], 5 * pi / 6, 1e-12);
}

TEST(Walk, RandomSpectraAndUnitarity) {
  for (unsigned seed = 0; seed < 50; ++seed) {
    const auto h = oracle::random_symmetric(4, 200 + seed);
    const double lam = oracle::two_norm_symmetric(h) * (1.0 + 0.05 * (seed % 5));
    const auto w = build_walk_operator(h, lam);
    EXPECT_LT((w.adjoint() * w - Eigen::MatrixXcd::Identity(8, 8)).norm(), 1e-10);
    const auto r = walk_spectrum(h, lam);
    EXPECT_EQ(r.pairs.size(), 8u);
    EXPECT_LE(r.max_residual, 1e-8) << seed;
  }
}

TEST(Walk, Rejects) {
  Eigen::MatrixXd asym(2, 2);
  asym << 0.0, 1.0, 0.0, 0.0;
  EXPECT_THROW(build_walk_operator(asym, 2.0), Error);
  EXPECT_THROW(build_walk_operator(Eigen::MatrixXd::Identity(2, 2), 0.5), Error);
}

TEST(Qpe, DyadicPhaseIsExact) {
  Eigen::MatrixXcd u = Eigen::MatrixXcd::Identity(2, 2);
  u(0, 0) = std::polar(1.0, 2 * pi * 0.25);
  const auto r = run_qpe(u, basis_state(2, 0), 3, 1000, 7);
  EXPECT_NEAR(r.probabilities[2], 1.0, 1e-12);
  EXPECT_EQ(r.counts[2], 1000u);
  EXPECT_EQ(r.mode(), 2u);
  EXPECT_DOUBLE_EQ(r.phase(r.mode()), 0.25);
}

TEST(Qpe, NonDyadicPhaseConcentrates) {
  Eigen::MatrixXcd u = Eigen::MatrixXcd::Identity(2, 2);
  u(1, 1) = std::polar(1.0, 2 * pi * 0.3);
  const auto r = run_qpe(u, basis_state(2, 1), 5, 20000, 11);
  EXPECT_NEAR(r.phase(r.mode()), 0.3, 1.0 / 32);
  // Standard bound: within one bin with probability >= 8 / pi^2.
  EXPECT_GE(r.mass_near(0.3, 1.0 / 32 + 1e-12), 8.0 / (pi * pi) - 0.02);
  double total = 0.0;
  for (double p : r.probabilities) total += p;
  EXPECT_NEAR(total, 1.0, 1e-12);
}

TEST(Qpe, CircuitAgreesWithSpectral) {
  const auto h = oracle::random_symmetric(3, 42);
  const auto w = build_walk_operator(h, 1.2 * oracle::two_norm_symmetric(h));
  Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(6);
  psi(0) = 0.6;
  psi(1) = std::complex<double>(0.0, 0.8);
  for (unsigned m : {1u, 4u, 8u, 10u}) {
    const auto a = run_qpe(w, psi, m, 100, 1, QpeMethod::circuit);
    const auto b = run_qpe(w, psi, m, 100, 1, QpeMethod::spectral);
    for (std::size_t x = 0; x < a.probabilities.size(); ++x)
      EXPECT_NEAR(a.probabilities[x], b.probabilities[x], 1e-10) << m << " " << x;
  }
}

TEST(Qpe, SeededSampling) {
  Eigen::MatrixXcd u = Eigen::MatrixXcd::Identity(2, 2);
  u(0, 0) = std::polar(1.0, 2.0);
  const auto a = run_qpe(u, basis_state(2, 0), 6, 500, 3);
  const auto b = run_qpe(u, basis_state(2, 0), 6, 500, 3);
  EXPECT_EQ(a.counts, b.counts);
  std::uint64_t total = 0;
  for (auto c : a.counts) total += c;
  EXPECT_EQ(total, 500u);
}

TEST(Qpe, Rejects) {
  Eigen::MatrixXcd notu = 2.0 * Eigen::MatrixXcd::Identity(2, 2);
  try {
    run_qpe(notu, basis_state(2, 0), 3, 10, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.category(), ErrorCategory::non_unitary);
  }
  EXPECT_THROW(run_qpe(Eigen::MatrixXcd::Identity(2, 2), basis_state(2, 0), 0, 10, 1), Error);
  EXPECT_THROW(run_qpe(Eigen::MatrixXcd::Identity(2, 2), basis_state(2, 0), 21, 10, 1), Error);
  EXPECT_THROW(run_qpe(Eigen::MatrixXcd::Identity(2, 2), Eigen::VectorXcd::Zero(2), 3, 10, 1),
               Error);
}

TEST(MicroPipeline, GroundEnergyWithinResolution) {
  for (unsigned seed = 1; seed <= 6; ++seed) {
    const std::size_t n = 1 + seed % 2;
    const auto I = small_system(n, seed);
    for (unsigned m : {6u, 9u, 12u}) {
      const auto g = qpe_ground_energy(I, m, 2000, seed);
      const double resolution = g.lambda * 2 * pi * std::ldexp(1.0, -static_cast<int>(m));
      EXPECT_NEAR(g.energy, g.exact, resolution + 1e-9) << seed << " m=" << m;
      EXPECT_NEAR(g.exact, sorted_eigenvalues(build_fock_matrix(I).entries).front(), 1e-12);
    }
  }
}
