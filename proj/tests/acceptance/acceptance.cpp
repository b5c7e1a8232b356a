// Prints one PASS/FAIL line per acceptance criterion and exits non-zero if
// any criterion fails.

#include <Eigen/Dense>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <fstream>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>

#include "qre/core/error.hpp"
#include "qre/dfact/double_factorization.hpp"
#include "qre/ingest/geometry.hpp"
#include "qre/ingest/integrals.hpp"
#include "qre/ingest/synthetic.hpp"
#include "qre/logical/logical_cost.hpp"
#include "qre/physical/physical_cost.hpp"
#include "qre/pipeline/config.hpp"
#include "qre/pipeline/fmo.hpp"
#include "qre/pipeline/scaling.hpp"
#include "qre/pipeline/table.hpp"
#include "qre/verify/fock.hpp"
#include "qre/verify/qpe.hpp"
#include "qre/verify/walk.hpp"

namespace {

using namespace qre;
using std::numbers::pi;

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

Eigen::MatrixXd random_symmetric(Eigen::Index n, unsigned seed) {
  std::srand(seed);
  Eigen::MatrixXd a = Eigen::MatrixXd::Random(n, n);
  return 0.5 * (a + a.transpose());
}

ingest::IntegralSet small_system(std::size_t n, unsigned seed) {
  auto I = ingest::gen_synthetic({n, ingest::pair_count(n), 0.5, seed});
  const auto h = random_symmetric(static_cast<Eigen::Index>(n), seed + 17);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) I.set_h1(i, j, h(i, j));
  I.core_energy = 0.1 * seed;
  return I;
}

double max_abs_diff(const std::vector<double>& a, const std::vector<double>& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

// Spectral norm of the n^2 x n^2 pair-matrix difference.
double pair_deviation(const std::vector<double>& a, const std::vector<double>& b, std::size_t n) {
  const auto n2 = static_cast<Eigen::Index>(n * n);
  Eigen::MatrixXd d(n2, n2);
  for (Eigen::Index r = 0; r < n2; ++r)
    for (Eigen::Index c = 0; c < n2; ++c) d(r, c) = a[r * n2 + c] - b[r * n2 + c];
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(d, Eigen::EigenvaluesOnly);
  return es.eigenvalues().cwiseAbs().maxCoeff();
}

Outcome ac1() {
  const auto rows = pipeline::load_table(pipeline::default_table_path());
  const auto start = std::chrono::steady_clock::now();
  const auto t = pipeline::reproduce_table(rows, pipeline::Config{});
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::size_t qubit_rows = 0;
  double worst_q = 0.0, worst_rt = 0.0;
  long long worst_f = 0;
  for (const auto& r : t.rows) {
    if (r.distance_ok) {
      ++qubit_rows;
      worst_q = std::max(worst_q, r.qubits_rel_error);
    }
    worst_rt = std::max(worst_rt, r.runtime_rel_error);
    worst_f = std::max(worst_f, std::abs(r.factory_diff));
  }
  const std::size_t n = rows.size();
  const bool pass = n == 47 && t.distance_matches >= 45 && t.qubit_matches == qubit_rows &&
                    t.runtime_matches == n && t.factory_matches == n && seconds < 1.0;
  return {pass, fmt("distance %zu/%zu, qubits %zu/%zu (max %.2f%%), runtime %zu/%zu (max %.2f%%), "
                    "factories %zu/%zu (max |diff| %lld), %.3f s",
                    t.distance_matches, n, t.qubit_matches, qubit_rows, 100 * worst_q,
                    t.runtime_matches, n, 100 * worst_rt, t.factory_matches, n, worst_f, seconds)};
}

Outcome ac2() {
  const auto rows = pipeline::load_table(pipeline::default_table_path());
  const auto t = pipeline::reproduce_table(rows, pipeline::Config{});
  int d6 = 0, d11 = 0;
  for (const auto& r : t.rows) {
    if (r.expected.basis != "6-31g*") continue;
    if (r.expected.fragment == "6") d6 = r.computed.distance;
    if (r.expected.fragment == "11") d11 = r.computed.distance;
  }
  return {d6 == 19 && d11 == 17, fmt("fragment 6 d=%d (want 19), fragment 11 d=%d (want 17)", d6, d11)};
}

Outcome ac3() {
  const auto rows = pipeline::load_table(pipeline::default_table_path());
  std::vector<std::pair<double, double>> points;
  for (const auto& r : rows)
    points.emplace_back(static_cast<double>(r.n_orb), static_cast<double>(r.t_count));
  const double slope = pipeline::fit_scaling(points);
  return {std::abs(slope - 5.0) <= 0.4, fmt("slope %.3f (want 5.0 +- 0.4)", slope)};
}

Outcome ac4() {
  const logical::EstimationConfig config;
  std::vector<std::pair<double, double>> points;
  double lo = 1e9, hi = 0.0;
  bool identities = true;
  for (std::size_t n = 4; n <= 12; ++n) {
    const auto df = dfact::factorize(ingest::gen_synthetic({n, ingest::pair_count(n), 1.0, n}));
    const auto e = logical::estimate_logical(df, config);
    const double ratio = static_cast<double>(e.n_logical_qubits) / static_cast<double>(n);
    lo = std::min(lo, ratio);
    hi = std::max(hi, ratio);
    points.emplace_back(static_cast<double>(n), static_cast<double>(e.t_count));
    const auto& s = e.step;
    identities = identities && e.t_count == e.qpe_steps * s.t_per_step &&
                 s.t_per_step == s.t_lookup + s.t_rotation + s.t_reflection &&
                 e.rotations_total == e.qpe_steps * s.rotations_per_step &&
                 static_cast<double>(e.rotations_total) * s.eps_rotation <=
                     config.budget_split.rotation &&
                 e.qpe_steps == logical::qpe_steps(e.lambda, config.eps_total_energy / 2) &&
                 e.n_logical_qubits == e.system_qubits + e.phase_qubits + s.ancilla_qubits;
  }
  const double split = config.budget_split.logical + config.budget_split.t_states +
                       config.budget_split.rotation;
  identities = identities && split <= config.error_budget;
  const double slope = pipeline::fit_scaling(points);
  const bool pass = slope >= 4.0 && slope <= 6.0 && lo >= 8.0 && hi <= 40.0 && identities;
  return {pass, fmt("slope %.3f in [4,6], qubits/orbital %.1f..%.1f in [8,40], identities %s",
                    slope, lo, hi, identities ? "hold" : "broken")};
}

Outcome ac5() {
  double worst_exact = 0.0;
  std::size_t cases = 0, bound_violations = 0;
  bool deterministic = true;
  for (std::size_t n = 1; n <= 6; ++n)
    for (std::size_t r = 0; r <= ingest::pair_count(n); ++r) {
      const auto I = ingest::gen_synthetic({n, r, 1.0, 31 * n + r});
      const auto df = dfact::factorize(I);
      worst_exact = std::max(worst_exact, max_abs_diff(dfact::reconstruct(df), I.h2_dense()));
      ++cases;
      if (r == ingest::pair_count(n)) {
        for (double tol : {1e-3, 1e-2, 0.1}) {
          const auto cut = dfact::factorize(I, tol, tol);
          if (pair_deviation(I.h2_dense(), dfact::reconstruct(cut), n) >
              dfact::pair_matrix_error_bound(cut) + 1e-12)
            ++bound_violations;
          deterministic = deterministic &&
                          dfact::to_json(cut) == dfact::to_json(dfact::factorize(I, tol, tol)) &&
                          dfact::to_json(cut) ==
                              dfact::to_json(dfact::factorize(I, tol, tol, dfact::Execution::serial));
        }
      }
    }
  const bool pass = worst_exact <= 1e-10 && bound_violations == 0 && deterministic;
  return {pass, fmt("%zu sets, max exact deviation %.2e, truncation bound violations %zu, "
                    "byte-exact %s",
                    cases, worst_exact, bound_violations, deterministic ? "yes" : "no")};
}

Outcome ac6() {
  double worst = 0.0;
  for (unsigned seed = 1; seed <= 30; ++seed) {
    const auto I = small_system(1 + seed % 3, seed);
    worst = std::max(worst, verify::check_df_equivalence(I, dfact::factorize(I)));
  }
  const auto I = small_system(3, 3);
  auto bad = dfact::factorize(I);
  bad.h_bar = I.h1_data();
  const double control = verify::check_df_equivalence(I, bad);
  return {worst <= 1e-9 && control > 1e-3,
          fmt("max deviation %.2e over 30 sets (n <= 3), omitted-correction control %.3e",
              worst, control)};
}

Outcome ac7() {
  double walk = 0.0;
  for (unsigned seed = 0; seed < 50; ++seed) {
    const auto h = random_symmetric(4, 200 + seed);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(h, Eigen::EigenvaluesOnly);
    const double lam = es.eigenvalues().cwiseAbs().maxCoeff() * (1.0 + 0.05 * (seed % 5));
    walk = std::max(walk, verify::walk_spectrum(h, lam).max_residual);
  }

  bool dyadic = true;
  for (unsigned m = 1; m <= 8; ++m)
    for (std::size_t x = 0; x < (std::size_t{1} << m); x += 1 + (x % 3)) {
      Eigen::MatrixXcd u = Eigen::MatrixXcd::Identity(2, 2);
      u(0, 0) = std::polar(1.0, 2 * pi * std::ldexp(static_cast<double>(x), -static_cast<int>(m)));
      Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(2);
      psi(0) = 1.0;
      const auto r = verify::run_qpe(u, psi, m, 1000, x + m);
      dyadic = dyadic && r.counts[x] == 1000;
    }

  // Success means landing within 2^-m of the true phase. Each case records
  // its exact probability and its 1000-shot empirical rate; the criterion uses
  // the exact per-case floor and the pooled empirical rate.
  double worst_exact = 1.0, worst_empirical = 1.0, pooled = 0.0;
  int trials = 0;
  for (double phi : {0.3, 0.123, 0.777, 0.5 + 1e-3}) {
    for (unsigned m : {4u, 6u, 8u}) {
      Eigen::MatrixXcd u = Eigen::MatrixXcd::Identity(2, 2);
      u(1, 1) = std::polar(1.0, 2 * pi * phi);
      Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(2);
      psi(1) = 1.0;
      const double radius = std::ldexp(1.0, -static_cast<int>(m));
      const auto r = verify::run_qpe(u, psi, m, 1000, 99 + m);
      double exact = 0.0;
      for (std::size_t x = 0; x < r.probabilities.size(); ++x) {
        const double d = std::abs(r.phase(x) - phi);
        if (std::min(d, 1.0 - d) <= radius) exact += r.probabilities[x];
      }
      const double empirical = r.mass_near(phi, radius);
      worst_exact = std::min(worst_exact, exact);
      worst_empirical = std::min(worst_empirical, empirical);
      pooled += empirical;
      ++trials;
    }
  }
  pooled /= trials;

  double micro_slack = -1e300;
  for (unsigned seed = 1; seed <= 6; ++seed) {
    const auto I = small_system(1 + seed % 2, seed);
    for (unsigned m : {6u, 9u, 12u}) {
      const auto g = verify::qpe_ground_energy(I, m, 2000, seed);
      const double allowed = g.lambda * 2 * pi * std::ldexp(1.0, -static_cast<int>(m)) + 1e-9;
      micro_slack = std::max(micro_slack, std::abs(g.energy - g.exact) - allowed);
    }
  }
  const bool pass = walk <= 1e-8 && dyadic && worst_exact >= 0.8 && pooled >= 0.8 &&
                    micro_slack <= 0.0;
  return {pass, fmt("walk residual %.2e, dyadic exact %s, non-dyadic success: exact min %.3f, "
                    "empirical pooled %.3f (min case %.3f), micro-pipeline margin %.2e",
                    walk, dyadic ? "yes" : "no", worst_exact, pooled, worst_empirical,
                    -micro_slack)};
}

Outcome ac8() {
  pipeline::FragmentEnergyLedger two;
  two.add_monomer("A", -1.0);
  two.add_monomer("B", -2.0);
  const double e_two = pipeline::fmo_assemble(two);
  two.add_dimer("A", "B", -3.5);
  const double e_pair = pipeline::fmo_assemble(two);

  pipeline::FragmentEnergyLedger big;
  for (int i = 0; i < 15; ++i) big.add_monomer("m" + std::to_string(i), -1.0);
  for (int i = 0; i < 15; ++i)
    for (int j = i + 1; j < 15; ++j)
      big.add_dimer("m" + std::to_string(i), "m" + std::to_string(j), -2.0);
  const double e_big = pipeline::fmo_assemble(big);

  const auto bind = pipeline::binding_affinity(-10.5, -9.0, -1.0);
  const bool pass = e_two == -3.0 && e_pair == -3.5 && big.dimers().size() == 105 &&
                    e_big == -15.0 && bind.hartree == -0.5 &&
                    std::abs(bind.kj_per_mol + 1312.75) < 5e-3;
  return {pass, fmt("two monomers %.4f, with dimer %.4f, 15/%zu case %.4f, binding %.4f Ha = "
                    "%.2f kJ/mol",
                    e_two, e_pair, big.dimers().size(), e_big, bind.hartree, bind.kj_per_mol)};
}

Outcome ac9() {
  const std::size_t counts[16] = {12, 10, 15, 20, 24, 17, 12, 11, 7, 21, 15, 16, 17, 17, 17, 25};
  std::size_t ok = 0;
  for (int id = 1; id <= 16; ++id) {
    const auto path = std::string(QRE_DATA_DIR) + "/geometries/fragment_" + std::to_string(id) + ".xyz";
    std::ifstream in(path);
    std::ostringstream text;
    text << in.rdbuf();
    const auto g = ingest::parse_xyz(text.str());
    const auto once = ingest::serialize_xyz(g);
    if (g.atoms.size() == counts[id - 1] && ingest::serialize_xyz(ingest::parse_xyz(once)) == once)
      ++ok;
  }

  auto category = [](const std::string& text) {
    try {
      ingest::parse_integrals(text);
    } catch (const Error& e) {
      return e.category();
    }
    return ErrorCategory::io;  // no error raised
  };
  std::size_t errors_ok = 0;
  errors_ok += category("NORB 2\n0.1 1 3 1 1\n") == ErrorCategory::index_range;
  errors_ok += category("NORB 2\n0.1 1 2 1 1\n0.2 2 1 1 1\n") == ErrorCategory::conflicting_duplicate;
  errors_ok += category("0.1 1 1 1 1\n") == ErrorCategory::missing_header;
  errors_ok += category("NORB 1\n0.1 1 1 x 1\n") == ErrorCategory::parse;
  const auto I = ingest::parse_integrals("NORB 2\n0.1 1 2 1 2\n0.3 2 1 1 1\n");
  const bool expanded = I.eri(1, 0, 1, 0) == 0.1 && I.eri(0, 0, 1, 0) == 0.3 &&
                        ingest::h2_symmetry_defect(I) == 0.0;
  const bool pass = ok == 16 && errors_ok == 4 && expanded;
  return {pass, fmt("%zu/16 geometries parse and round-trip, integral error categories %zu/4, "
                    "8-fold expansion %s",
                    ok, errors_ok, expanded ? "ok" : "wrong")};
}

}  // namespace

int main() {
  const std::function<Outcome()> checks[] = {ac1, ac2, ac3, ac4, ac5, ac6, ac7, ac8, ac9};
  int failures = 0;
  for (int i = 0; i < 9; ++i) {
    Outcome o;
    try {
      o = checks[i]();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::printf("AC%d %s %s\n", i + 1, o.pass ? "PASS" : "FAIL", o.detail.c_str());
    failures += o.pass ? 0 : 1;
  }
  return failures == 0 ? 0 : 1;
}
