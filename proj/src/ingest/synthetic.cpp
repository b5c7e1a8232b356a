#include "qre/ingest/synthetic.hpp"

#include <random>
#include <vector>

#include "qre/core/error.hpp"

namespace qre::ingest {

namespace {

double unit_uniform(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

IntegralSet gen_synthetic(const SyntheticSpec& spec) {
  const std::size_t n = spec.n_orb;
  if (n == 0) throw Error(ErrorCategory::invalid_argument, "n_orb must be positive");
  if (spec.rank > pair_count(n)) {
    throw Error(ErrorCategory::invalid_argument,
                "rank exceeds n_orb(n_orb+1)/2");
  }
  if (!(spec.magnitude > 0.0)) {
    throw Error(ErrorCategory::invalid_argument, "magnitude must be positive");
  }

  std::mt19937_64 rng(spec.seed);
  IntegralSet out(n);
  out.core_energy = spec.magnitude * unit_uniform(rng);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j)
      out.set_h1(i, j, spec.magnitude * (2.0 * unit_uniform(rng) - 1.0));

  const std::size_t npair = pair_count(n);
  std::vector<double> pair_matrix(npair * npair, 0.0);
  std::vector<double> leaf(npair);
  const double scale = 1.0 / static_cast<double>(n);
  for (std::size_t r = 0; r < spec.rank; ++r) {
    const double weight = spec.magnitude * (0.5 + unit_uniform(rng));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j)
        leaf[pair_index(i, j)] = (2.0 * unit_uniform(rng) - 1.0) * scale;
    for (std::size_t a = 0; a < npair; ++a)
      for (std::size_t b = 0; b <= a; ++b)
        pair_matrix[a * npair + b] += weight * leaf[a] * leaf[b];
  }
  for (std::size_t a = 0; a < npair; ++a)
    for (std::size_t b = 0; b <= a; ++b) {
      // Packed slot (a, b) is shared by (i j|k l) and all its images.
      std::size_t i = 0;
      while ((i + 1) * (i + 2) / 2 <= a) ++i;
      const std::size_t j = a - i * (i + 1) / 2;
      std::size_t k = 0;
      while ((k + 1) * (k + 2) / 2 <= b) ++k;
      const std::size_t l = b - k * (k + 1) / 2;
      out.set_eri(i, j, k, l, pair_matrix[a * npair + b]);
    }
  return out;
}

}  // namespace qre::ingest
