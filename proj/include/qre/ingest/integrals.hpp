#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace qre::ingest {

/// Index of the unordered pair (i, j) in packed lower-triangular order.
constexpr std::size_t pair_index(std::size_t i, std::size_t j) noexcept {
  return i >= j ? i * (i + 1) / 2 + j : j * (j + 1) / 2 + i;
}

constexpr std::size_t pair_count(std::size_t n_orb) noexcept {
  return n_orb * (n_orb + 1) / 2;
}

/**
 * One- and two-electron integrals of the spatial-orbital electronic
 * Hamiltonian, in Hartree.
 *
 * The two-electron tensor uses chemists' notation (ij|kl) and is stored once
 * per 8-fold symmetry class: a packed symmetric matrix over unordered index
 * pairs. Every accessor therefore returns identical values for all eight
 * index permutations. `h1` is stored densely (row-major) so that asymmetric
 * input can still be detected downstream.
 */
class IntegralSet {
 public:
  IntegralSet() = default;
  explicit IntegralSet(std::size_t n_orb);

  std::size_t n_orb() const noexcept { return n_orb_; }
  std::size_t n_pairs() const noexcept { return pair_count(n_orb_); }

  double core_energy = 0.0;

  double h1(std::size_t i, std::size_t j) const { return h1_[i * n_orb_ + j]; }
  double& h1(std::size_t i, std::size_t j) { return h1_[i * n_orb_ + j]; }
  /// Sets both h1(i,j) and h1(j,i).
  void set_h1(std::size_t i, std::size_t j, double value);

  double eri(std::size_t i, std::size_t j, std::size_t k, std::size_t l) const {
    return h2_[packed_slot(pair_index(i, j), pair_index(k, l))];
  }
  void set_eri(std::size_t i, std::size_t j, std::size_t k, std::size_t l,
               double value) {
    h2_[packed_slot(pair_index(i, j), pair_index(k, l))] = value;
  }

  /// Pair-matrix element V_{(ij),(kl)} addressed by packed pair indices.
  double pair_element(std::size_t ij, std::size_t kl) const {
    return h2_[packed_slot(ij, kl)];
  }

  const std::vector<double>& h1_data() const noexcept { return h1_; }
  const std::vector<double>& h2_packed() const noexcept { return h2_; }

  /// Full n^4 tensor, index ((i*n + j)*n + k)*n + l.
  std::vector<double> h2_dense() const;

  /// Builds from a dense n^4 tensor; throws asymmetric_input when any of the
  /// eight permutational images differ by more than `tol`.
  static IntegralSet from_dense(std::size_t n_orb, double core,
                                const std::vector<double>& h1,
                                const std::vector<double>& h2, double tol = 0.0);

  bool operator==(const IntegralSet&) const = default;

 private:
  static std::size_t packed_slot(std::size_t a, std::size_t b) noexcept {
    return pair_index(a, b);
  }

  std::size_t n_orb_ = 0;
  std::vector<double> h1_;
  std::vector<double> h2_;
};

/// Largest |h1(i,j) - h1(j,i)|.
double h1_asymmetry(const IntegralSet& integrals);

/// Largest deviation among the 8 permutational images after dense expansion.
/// Zero for every IntegralSet by construction; kept as an audit.
double h2_symmetry_defect(const IntegralSet& integrals);

/**
 * Parses the plain-text integral format:
 *
 *     NORB <n>
 *     <value> i j k l       (1-based; i j 0 0 = h_ij; 0 0 0 0 = core)
 *
 * `#` starts a comment line. One representative per symmetry class suffices;
 * repeated records must agree within 1e-10.
 */
IntegralSet parse_integrals(std::string_view text);

/// Writes one canonical record per symmetry class (i>=j, k>=l, ij>=kl),
/// skipping exact zeros. Values use shortest round-trip decimals.
std::string serialize_integrals(const IntegralSet& integrals);

IntegralSet read_integral_file(const std::string& path);

}  // namespace qre::ingest
