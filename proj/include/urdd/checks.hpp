// Built-in consistency checks behind the CLI `validate` verb: golden phase
// list, unit timing accounting, witness values on ideal and maximally mixed
// states, the mapping-table conjugation oracle, and the identity action of
// the ideal 8-pulse unit.
#pragma once

#include "urdd/analytic.hpp"
#include "urdd/experiment.hpp"

#include <functional>
#include <numbers>
#include <ostream>
#include <vector>

namespace urdd {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

inline std::vector<CheckResult> run_consistency_checks() {
  const double pi = std::numbers::pi;
  std::vector<CheckResult> results;
  auto add = [&](const std::string& name, std::function<bool(std::string&)> body) {
    CheckResult r;
    r.name = name;
    try {
      r.passed = body(r.detail);
    } catch (const std::exception& e) {
      r.passed = false;
      r.detail = e.what();
    }
    results.push_back(std::move(r));
  };

  add("ur8 phase list", [&](std::string& detail) {
    const std::vector<double> expected = {0,  pi / 2, 3 * pi / 2, pi,
                                          pi, 3 * pi / 2, pi / 2, 0};
    const std::vector<double> got = urdd_phases(8, pi / 2);
    for (std::size_t k = 0; k < 8; ++k)
      if (angle_distance(got[k], expected[k]) > 1e-12) {
        detail = "phase " + std::to_string(k + 1) + " off";
        return false;
      }
    return true;
  });

  add("unit timing", [&](std::string& detail) {
    const DDUnitSpec unit = DDUnitSpec::ur8();
    if (unit.wall_time_ns() != 8 * 35.5 + 8 * 70.0) {
      detail = "wall time " + std::to_string(unit.wall_time_ns()) + " ns";
      return false;
    }
    if (unit.slot_count() != 24) {
      detail = "slot count " + std::to_string(unit.slot_count());
      return false;
    }
    return true;
  });

  add("witness values", [&](std::string& detail) {
    const StateKind kinds[] = {StateKind::Triplet2, StateKind::GHZ3, StateKind::GHZ4,
                               StateKind::Cluster4};
    const double mixed_expected[] = {-1.0 / 4, -3.0 / 8, -7.0 / 16, -7.0 / 16};
    for (int i = 0; i < 4; ++i) {
      const WitnessOperator w = witness_operator(kinds[i]);
      const double ideal = entanglement_parameter_exact(prepare_ideal(kinds[i]), w);
      if (std::abs(ideal - 0.5) > 1e-10) {
        detail = std::string(to_string(kinds[i])) + " ideal theta " + std::to_string(ideal);
        return false;
      }
      DensityMatrix mixed(w.n_qubits);
      mixed.mutable_data() = Mat::Identity(1 << w.n_qubits, 1 << w.n_qubits) /
                             static_cast<double>(1 << w.n_qubits);
      const double got = entanglement_parameter_exact(mixed, w);
      if (std::abs(got - mixed_expected[i]) > 1e-15) {
        detail = std::string(to_string(kinds[i])) + " mixed theta " + std::to_string(got);
        return false;
      }
    }
    return true;
  });

  add("mapping oracle", [&](std::string&) {
    std::mt19937_64 rng(0x6f7261636c65ULL);
    for (StateKind kind : {StateKind::Triplet2, StateKind::GHZ3, StateKind::GHZ4,
                           StateKind::Cluster4})
      verify_mapping_table(kind, 50, 1e-9, rng);
    return true;
  });

  add("ideal unit action", [&](std::string& detail) {
    const DDUnitSpec unit = DDUnitSpec::ur8();
    const Mat2 u = unit_propagator(unit, 0.0);
    const FidelityResult f = sequence_fidelity(u, target_propagator(unit.phases));
    if (f.infidelity >= 1e-10) {
      detail = "infidelity " + std::to_string(f.infidelity);
      return false;
    }
    return true;
  });

  return results;
}

// Prints one line per check; returns the number of failures.
inline int report_consistency_checks(std::ostream& os) {
  int failures = 0;
  for (const CheckResult& r : run_consistency_checks()) {
    os << (r.passed ? "[ok]   " : "[FAIL] ") << r.name;
    if (!r.detail.empty()) os << " - " << r.detail;
    os << '\n';
    if (!r.passed) ++failures;
  }
  return failures;
}

}  // namespace urdd
