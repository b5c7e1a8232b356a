#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "qre/core/error.hpp"
#include "qre/dfact/double_factorization.hpp"
#include "qre/ingest/synthetic.hpp"
#include "qre/logical/logical_cost.hpp"
#include "qre/pipeline/scaling.hpp"

using namespace qre;
using namespace qre::logical;

TEST(QpeSteps, Formula) {
  EXPECT_EQ(qpe_steps(0.0, 1e-3), 0u);
  EXPECT_EQ(qpe_steps(1.0, 1e-3), 1571u);
  EXPECT_EQ(qpe_steps(1.0, 1e-3), static_cast<std::uint64_t>(std::ceil(500 * std::numbers::pi)));
  EXPECT_THROW(qpe_steps(1.0, 0.0), Error);
  EXPECT_THROW(qpe_steps(-1.0, 1e-3), Error);
}

TEST(QpeSteps, DoublingLambda) {
  for (double lam = 0.01; lam < 1e4; lam *= 1.37) {
    const auto one = static_cast<double>(qpe_steps(lam, 1e-3));
    const auto two = static_cast<double>(qpe_steps(2 * lam, 1e-3));
    EXPECT_LE(std::abs(two - 2 * one), 1.0);
    EXPECT_GE(two, one);
  }
}

TEST(WalkStep, OneBodyOnly) {
  const EstimationConfig config;
  for (std::size_t n : {1u, 2u, 5u, 17u, 64u}) {
    const auto c = walk_step_cost({n, 0, 0}, 1000, config);
    EXPECT_GT(c.t_per_step, 0u);
    EXPECT_GE(c.ancilla_qubits, static_cast<std::size_t>(std::ceil(std::log2(n))));
    EXPECT_EQ(c.t_per_step, c.t_lookup + c.t_rotation + c.t_reflection);
  }
}

TEST(WalkStep, HandCount) {
  EstimationConfig config;
  // n = 4, R = 10, M = 40: L = 11, K = 44.
  const auto c = walk_step_cost({4, 10, 40}, 1000, config);
  EXPECT_EQ(c.t_lookup, 8u * (11 + 44));
  EXPECT_EQ(c.t_reflection, 8u * 4 + 4u * (4 + 6));
  EXPECT_EQ(c.rotations_per_step, 16u);
  const double eps = config.budget_split.rotation / 16000.0;
  EXPECT_EQ(c.t_per_rotation, static_cast<std::uint64_t>(std::ceil(3.0 * std::log2(1.0 / eps))));
  EXPECT_EQ(c.index_qubits, 4u + 6u);
  EXPECT_EQ(c.ancilla_qubits, 10u + 4u * 16 + 16 + 20 + 6 + 3);
}

TEST(WalkStep, MonotoneInLeaves) {
  const EstimationConfig config;
  std::uint64_t last = 0;
  for (std::size_t r = 1; r <= 4096; r *= 2) {
    const auto c = walk_step_cost({20, r, r * 20}, 1u << 20, config);
    EXPECT_GT(c.t_per_step, last);
    last = c.t_per_step;
  }
}

TEST(Estimate, ZeroHamiltonian) {
  const auto e = estimate_logical(dfact::factorize(ingest::IntegralSet(4)));
  EXPECT_EQ(e.qpe_steps, 0u);
  EXPECT_EQ(e.t_count, 0u);
  EXPECT_EQ(e.rotations_total, 0u);
}

TEST(Estimate, Composition) {
  const auto df = dfact::factorize(ingest::gen_synthetic({5, 8, 1.0, 4}));
  const EstimationConfig config;
  const auto e = estimate_logical(df, config);
  EXPECT_EQ(e.lambda, dfact::lambda_norms(df).total);
  EXPECT_EQ(e.qpe_steps, qpe_steps(e.lambda, 0.5e-3));
  EXPECT_EQ(e.t_count, e.qpe_steps * e.step.t_per_step);
  EXPECT_EQ(e.n_logical_qubits,
            10 + static_cast<std::size_t>(std::ceil(std::log2(e.qpe_steps))) + e.step.ancilla_qubits);
  EXPECT_GE(e.t_count, e.qpe_steps);
}

TEST(Estimate, RotationBudgetExact) {
  EstimationConfig config;
  for (double lam : {0.3, 1.0, 7.7, 123.0, 4.5e3, 1.2e4}) {
    for (std::size_t n : {2u, 7u, 50u, 192u}) {
      const auto e = estimate_logical(WalkDims{n, 3 * n, 3 * n * n}, lam, config);
      const double implied = static_cast<double>(e.rotations_total) * e.step.eps_rotation;
      EXPECT_LE(implied, config.budget_split.rotation);
      EXPECT_EQ(e.rotations_total, e.qpe_steps * e.step.rotations_per_step);
    }
  }
}

TEST(Estimate, MonotoneInEveryInput) {
  const EstimationConfig config;
  const auto base = estimate_logical(WalkDims{10, 30, 200}, 50.0, config);
  for (const auto& bigger : {estimate_logical(WalkDims{11, 30, 200}, 50.0, config),
                             estimate_logical(WalkDims{10, 31, 200}, 50.0, config),
                             estimate_logical(WalkDims{10, 30, 201}, 50.0, config),
                             estimate_logical(WalkDims{10, 30, 200}, 51.0, config)}) {
    EXPECT_GE(bigger.t_count, base.t_count);
    EXPECT_GE(bigger.n_logical_qubits, base.n_logical_qubits);
  }
  EstimationConfig tighter = config;
  tighter.eps_total_energy = 0.5e-3;
  const auto tight = estimate_logical(WalkDims{10, 30, 200}, 50.0, tighter);
  EXPECT_GT(tight.t_count, base.t_count);
  EXPECT_GE(tight.n_logical_qubits, base.n_logical_qubits);
}

TEST(Estimate, CalibrationBracket) {
  // 192 orbitals, R = 5n leaves of full rank, lambda typical of such systems.
  const std::size_t n = 192;
  const auto e = estimate_logical(WalkDims{n, 5 * n, 5 * n * n}, 1.2e4);
  const double ratio = static_cast<double>(e.t_count) / 1.17e14;
  EXPECT_GT(ratio, 1.0 / 3.0);
  EXPECT_LT(ratio, 3.0);
}

TEST(Estimate, SyntheticFamilyScaling) {
  std::vector<std::pair<double, double>> points;
  for (std::size_t n = 4; n <= 12; ++n) {
    const auto I = ingest::gen_synthetic({n, ingest::pair_count(n), 1.0, n});
    const auto e = estimate_logical(dfact::factorize(I));
    const double ratio = static_cast<double>(e.n_logical_qubits) / static_cast<double>(n);
    EXPECT_GE(ratio, 8.0);
    EXPECT_LE(ratio, 40.0);
    points.emplace_back(static_cast<double>(n), static_cast<double>(e.t_count));
  }
  const double slope = pipeline::fit_scaling(points);
  EXPECT_GE(slope, 4.0);
  EXPECT_LE(slope, 6.0);
}

TEST(Estimate, DeterministicAndOverflowChecked) {
  const auto df = dfact::factorize(ingest::gen_synthetic({6, 21, 1.0, 9}));
  const auto a = estimate_logical(df);
  const auto b = estimate_logical(df);
  EXPECT_EQ(a.t_count, b.t_count);
  EXPECT_EQ(a.n_logical_qubits, b.n_logical_qubits);
  EXPECT_EQ(checked_mul(1'000'000'000ULL, 1'000'000'000ULL), 1'000'000'000'000'000'000ULL);
  EXPECT_THROW(checked_mul(1ULL << 40, 1ULL << 40), Error);
  EXPECT_THROW(estimate_logical(WalkDims{1000, 100000, 100000000}, 1e12), Error);
}

TEST(Config, Validation) {
  EstimationConfig c;
  EXPECT_NO_THROW(c.validate());
  c.budget_split.logical += 1e-6;
  EXPECT_THROW(c.validate(), Error);
  c = {};
  c.eps_total_energy = 0.0;
  EXPECT_THROW(c.validate(), Error);
}
