#include "qre/pipeline/fmo.hpp"

#include <cmath>
#include <sstream>

#include "qre/core/error.hpp"
#include "qre/core/format.hpp"

namespace qre::pipeline {

void FragmentEnergyLedger::add_monomer(const std::string& label, double energy) {
  if (!monomers_.emplace(label, energy).second) {
    throw Error(ErrorCategory::conflicting_duplicate, "duplicate monomer: " + label);
  }
}

void FragmentEnergyLedger::add_dimer(const std::string& a, const std::string& b,
                                     double energy) {
  if (a == b) throw Error(ErrorCategory::invalid_argument, "dimer pairs a fragment with itself");
  for (const auto& label : {a, b}) {
    if (!monomers_.contains(label)) {
      throw Error(ErrorCategory::invalid_argument, "dimer references unknown monomer: " + label);
    }
  }
  auto key = a < b ? std::make_pair(a, b) : std::make_pair(b, a);
  if (!dimers_.emplace(std::move(key), energy).second) {
    throw Error(ErrorCategory::conflicting_duplicate, "duplicate dimer: " + a + " " + b);
  }
}

FragmentEnergyLedger parse_ledger(std::string_view text) {
  struct PendingDimer {
    std::string a, b;
    double energy;
    std::size_t line;
  };
  FragmentEnergyLedger ledger;
  std::vector<PendingDimer> dimers;
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const auto line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    std::istringstream fields{std::string(line)};
    std::vector<std::string> tok;
    for (std::string t; fields >> t;) tok.push_back(t);
    const auto energy = parse_double(tok.back());
    if (!energy) throw ParseError(ErrorCategory::parse, line_no, "bad energy: " + tok.back());
    if (tok[0] == "monomer" && tok.size() == 3) {
      try {
        ledger.add_monomer(tok[1], *energy);
      } catch (const Error& e) {
        throw ParseError(e.category(), line_no, e.what());
      }
    } else if (tok[0] == "dimer" && tok.size() == 4) {
      dimers.push_back({tok[1], tok[2], *energy, line_no});
    } else {
      throw ParseError(ErrorCategory::parse, line_no, "expected 'monomer' or 'dimer' record");
    }
  }
  for (const auto& d : dimers) {
    try {
      ledger.add_dimer(d.a, d.b, d.energy);
    } catch (const Error& e) {
      throw ParseError(e.category(), d.line, e.what());
    }
  }
  if (ledger.monomers().empty()) throw Error(ErrorCategory::empty_input, "ledger has no monomers");
  return ledger;
}

double fmo_assemble(const FragmentEnergyLedger& ledger) {
  const auto& mono = ledger.monomers();
  double total = 0.0;
  for (const auto& [label, e] : mono) total += e;
  for (const auto& [key, e] : ledger.dimers()) {
    total += e - mono.at(key.first) - mono.at(key.second);
  }
  return total;
}

BindingEnergy binding_affinity(double e_complex, double e_apo, double e_ion) {
  const double de = e_complex - e_apo - e_ion;
  return {de, de * kKjPerMolPerHartree};
}

std::vector<std::pair<std::size_t, std::size_t>> indistinguishable_pairs(
    const std::vector<Candidate>& candidates, double window_kj) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < candidates.size(); ++i)
    for (std::size_t j = i + 1; j < candidates.size(); ++j)
      if (std::abs(candidates[i].energy_kj - candidates[j].energy_kj) < window_kj) {
        out.emplace_back(i, j);
      }
  return out;
}

}  // namespace qre::pipeline
