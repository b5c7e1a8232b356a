#include "qre/verify/fock.hpp"

#include <bit>
#include <exception>
#include <optional>
#include <vector>

#include "qre/core/error.hpp"

namespace qre::verify {

namespace {

using State = std::uint32_t;

struct Amplitude {
  State state;
  double sign;
};

int parity_below(State s, std::size_t p) {
  return std::popcount(s & ((State{1} << p) - 1)) & 1;
}

std::optional<Amplitude> annihilate(Amplitude a, std::size_t p) {
  if (!(a.state >> p & 1U)) return std::nullopt;
  const double sign = parity_below(a.state, p) ? -a.sign : a.sign;
  return Amplitude{a.state & ~(State{1} << p), sign};
}

std::optional<Amplitude> create(Amplitude a, std::size_t p) {
  if (a.state >> p & 1U) return std::nullopt;
  const double sign = parity_below(a.state, p) ? -a.sign : a.sign;
  return Amplitude{a.state | (State{1} << p), sign};
}

void check_size(std::size_t n_orb) {
  if (n_orb > kMaxFockOrbitals) {
    throw Error(ErrorCategory::resource_limit,
                "Fock space too large: n_orb must be <= " +
                    std::to_string(kMaxFockOrbitals));
  }
}

// Fills column `col` of the Hamiltonian (the image of basis state col).
void fill_column(const ingest::IntegralSet& I, State col, Eigen::MatrixXd& out) {
  const std::size_t n = I.n_orb();
  const Amplitude start{col, 1.0};
  out(col, col) += I.core_energy;
  for (std::size_t sigma = 0; sigma < 2; ++sigma)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        const double h = I.h1(i, j);
        if (h == 0.0) continue;
        auto a = annihilate(start, j + sigma * n);
        if (!a) continue;
        a = create(*a, i + sigma * n);
        if (a) out(a->state, col) += h * a->sign;
      }
  // 1/2 sum (ij|kl) a+_{i s} a+_{k r} a_{l r} a_{j s}
  for (std::size_t s = 0; s < 2; ++s)
    for (std::size_t r = 0; r < 2; ++r)
      for (std::size_t j = 0; j < n; ++j) {
        const auto a1 = annihilate(start, j + s * n);
        if (!a1) continue;
        for (std::size_t l = 0; l < n; ++l) {
          const auto a2 = annihilate(*a1, l + r * n);
          if (!a2) continue;
          for (std::size_t k = 0; k < n; ++k) {
            const auto a3 = create(*a2, k + r * n);
            if (!a3) continue;
            for (std::size_t i = 0; i < n; ++i) {
              const double v = I.eri(i, j, k, l);
              if (v == 0.0) continue;
              const auto a4 = create(*a3, i + s * n);
              if (a4) out(a4->state, col) += 0.5 * v * a4->sign;
            }
          }
        }
      }
}

}  // namespace

FockMatrix build_fock_matrix(const ingest::IntegralSet& integrals, Execution execution) {
  const std::size_t n = integrals.n_orb();
  check_size(n);
  const auto dim = static_cast<long long>(std::size_t{1} << (2 * n));
  FockMatrix f{n, Eigen::MatrixXd::Zero(dim, dim)};
  if (execution == Execution::serial) {
    for (long long c = 0; c < dim; ++c) fill_column(integrals, static_cast<State>(c), f.entries);
  } else {
    // Each iteration writes only its own column.
#pragma omp parallel for schedule(dynamic, 16)
    for (long long c = 0; c < dim; ++c) fill_column(integrals, static_cast<State>(c), f.entries);
  }
  return f;
}

Eigen::MatrixXd one_body_operator(const std::vector<double>& m, std::size_t n) {
  check_size(n);
  const auto dim = static_cast<long long>(std::size_t{1} << (2 * n));
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(dim, dim);
  for (long long c = 0; c < dim; ++c) {
    const Amplitude start{static_cast<State>(c), 1.0};
    for (std::size_t sigma = 0; sigma < 2; ++sigma)
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
          const double v = m[i * n + j];
          if (v == 0.0) continue;
          auto a = annihilate(start, j + sigma * n);
          if (!a) continue;
          a = create(*a, i + sigma * n);
          if (a) out(a->state, c) += v * a->sign;
        }
  }
  return out;
}

FockMatrix build_df_fock_matrix(const dfact::DFDecomposition& df) {
  const std::size_t n = df.n_orb;
  check_size(n);
  FockMatrix f{n, one_body_operator(df.h_bar, n)};
  f.entries.diagonal().array() += df.core_energy;
  for (const auto& leaf : df.leaves) {
    const Eigen::MatrixXd o = one_body_operator(dfact::leaf_matrix(leaf, n), n);
    f.entries.noalias() += 0.5 * leaf.weight * (o * o);
  }
  return f;
}

Eigen::MatrixXd number_operator(std::size_t n) {
  check_size(n);
  const auto dim = static_cast<long long>(std::size_t{1} << (2 * n));
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(dim, dim);
  for (long long c = 0; c < dim; ++c) out(c, c) = std::popcount(static_cast<State>(c));
  return out;
}

double spectral_norm(const Eigen::MatrixXd& symmetric) {
  if (symmetric.size() == 0) return 0.0;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(symmetric, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw Error(ErrorCategory::numerical_failure, "symmetric eigensolve failed");
  }
  return solver.eigenvalues().cwiseAbs().maxCoeff();
}

double check_df_equivalence(const ingest::IntegralSet& integrals,
                            const dfact::DFDecomposition& df) {
  if (integrals.n_orb() != df.n_orb) {
    throw Error(ErrorCategory::invalid_argument, "orbital counts differ");
  }
  if (df.n_orb > 3) {
    throw Error(ErrorCategory::resource_limit, "equivalence check limited to n_orb <= 3");
  }
  const auto exact = build_fock_matrix(integrals);
  const auto factored = build_df_fock_matrix(df);
  return spectral_norm(exact.entries - factored.entries);
}

}  // namespace qre::verify
