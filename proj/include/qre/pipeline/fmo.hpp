#pragma once

#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace qre::pipeline {

inline constexpr double kKjPerMolPerHartree = 2625.4996;

/// Monomer energies and optional dimer energies (Hartree). Dimer keys are
/// stored with the smaller label first.
class FragmentEnergyLedger {
 public:
  /// conflicting_duplicate if the label already exists.
  void add_monomer(const std::string& label, double energy);
  /// invalid_argument for unknown monomers or a self-pair,
  /// conflicting_duplicate for a repeated pair.
  void add_dimer(const std::string& a, const std::string& b, double energy);

  const std::map<std::string, double>& monomers() const { return monomers_; }
  const std::map<std::pair<std::string, std::string>, double>& dimers() const {
    return dimers_;
  }

 private:
  std::map<std::string, double> monomers_;
  std::map<std::pair<std::string, std::string>, double> dimers_;
};

/**
 * Text ledger, one record per line, '#' comments:
 *   monomer <label> <energy>
 *   dimer <label> <label> <energy>
 * Dimers may appear before their monomers; references are checked at the end.
 */
FragmentEnergyLedger parse_ledger(std::string_view text);

/// sum_I E_I + sum over listed pairs of (E_IJ - E_I - E_J).
double fmo_assemble(const FragmentEnergyLedger& ledger);

struct BindingEnergy {
  double hartree = 0.0;
  double kj_per_mol = 0.0;
};

/// E_complex - E_apo - E_ion.
BindingEnergy binding_affinity(double e_complex, double e_apo, double e_ion);

struct Candidate {
  std::string label;
  double energy_kj = 0.0;
};

/// Index pairs (i < j) whose energy gap is below the accuracy window, i.e.
/// candidates the method cannot tell apart.
std::vector<std::pair<std::size_t, std::size_t>> indistinguishable_pairs(
    const std::vector<Candidate>& candidates, double window_kj);

}  // namespace qre::pipeline
