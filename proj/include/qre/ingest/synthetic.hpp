#pragma once

#include <cstddef>
#include <cstdint>

#include "qre/ingest/integrals.hpp"

namespace qre::ingest {

struct SyntheticSpec {
  std::size_t n_orb = 1;
  std::size_t rank = 0;
  double magnitude = 1.0;
  std::uint64_t seed = 0;
};

/**
 * Random integral set whose two-electron tensor is an explicit low-rank sum
 *
 *     (ij|kl) = sum_r c_r L^(r)_ij L^(r)_kl
 *
 * with random symmetric L^(r), so the first-stage pair matrix has rank at
 * most `rank` and exact 8-fold symmetry.
 *
 * Sampling (std::mt19937_64 seeded with `seed`; u = (x >> 11) * 2^-53):
 *   - core = magnitude * u
 *   - h1(i,j), i <= j: magnitude * (2u - 1)
 *   - for r in 0..rank-1: c_r = magnitude * (0.5 + u), then
 *     L^(r)(i,j), i <= j, row-major: (2u - 1) / n_orb
 *
 * Throws invalid_argument when rank > n_orb(n_orb+1)/2 or n_orb == 0.
 */
IntegralSet gen_synthetic(const SyntheticSpec& spec);

}  // namespace qre::ingest
