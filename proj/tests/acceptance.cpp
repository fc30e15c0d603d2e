// Acceptance suite: runs every top-level requirement at its stated
// tolerance and prints one pass/fail line per criterion. Exits nonzero if
// any criterion fails.

#include "urdd/analytic.hpp"
#include "urdd/experiment.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <numbers>
#include <sstream>
#include <vector>

using namespace urdd;

namespace {

const double pi = std::numbers::pi;
int g_failures = 0;

void run_criterion(const std::string& name, const std::function<bool(std::string&)>& body) {
  std::string detail;
  bool ok = false;
  try {
    ok = body(detail);
  } catch (const std::exception& e) {
    detail = std::string("exception: ") + e.what();
  }
  std::cout << (ok ? "[PASS] " : "[FAIL] ") << name;
  if (!detail.empty()) std::cout << " | " << detail;
  std::cout << std::endl;
  if (!ok) ++g_failures;
}

double elapsed_s(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

struct PointStats {
  double mean = 0.0;
  double stderr_mean = 0.0;
};

PointStats point_at(const TimeSeries& ts, int m) {
  for (const TimePoint& p : ts.points)
    if (p.m == m) return {p.theta_mean, p.theta_stderr};
  throw std::runtime_error("missing time point");
}

}  // namespace

int main() {
  run_criterion("1. phase formula golden values", [](std::string& detail) {
    const std::vector<double> expected = {0, pi / 2, 3 * pi / 2, pi, pi, 3 * pi / 2, pi / 2, 0};
    const std::vector<double> got = urdd_phases(8, pi / 2);
    double worst = 0.0;
    for (std::size_t k = 0; k < 8; ++k)
      worst = std::max(worst, angle_distance(got[k], expected[k]));
    std::ostringstream os;
    os << "max mod-2pi deviation " << worst;
    detail = os.str();
    return worst <= 1e-12;
  });

  run_criterion("2. unit timing accounting", [](std::string& detail) {
    const DDUnitSpec unit = DDUnitSpec::ur8();
    const bool wall_ok = unit.wall_time_ns() == 8 * 35.5 + 8 * 70.0 && unit.wall_time_ns() == 844.0;
    const auto events = build_unit_timeline(unit, 0.0);
    double total = 0.0;
    for (const auto& ev : events) total += ev.duration_ns;
    const bool slots_ok = unit.slot_count() == 24 && events.size() == 24 && total == 844.0;
    std::ostringstream os;
    os << "wall " << unit.wall_time_ns() << " ns, " << events.size() << " slots";
    detail = os.str();
    return wall_ok && slots_ok;
  });

  run_criterion("3. witness golden values", [](std::string& detail) {
    const StateKind kinds[] = {StateKind::Triplet2, StateKind::GHZ3, StateKind::GHZ4,
                               StateKind::Cluster4};
    const double mixed_expected[] = {-1.0 / 4, -3.0 / 8, -7.0 / 16, -7.0 / 16};
    double worst_ideal = 0.0, worst_mixed = 0.0;
    for (int i = 0; i < 4; ++i) {
      const WitnessOperator w = witness_operator(kinds[i]);
      worst_ideal = std::max(
          worst_ideal,
          std::abs(entanglement_parameter_exact(prepare_ideal(kinds[i]), w) - 0.5));
      DensityMatrix mixed(w.n_qubits);
      mixed.mutable_data() =
          Mat::Identity(1 << w.n_qubits, 1 << w.n_qubits) / static_cast<double>(1 << w.n_qubits);
      worst_mixed = std::max(
          worst_mixed, std::abs(entanglement_parameter_exact(mixed, w) - mixed_expected[i]));
    }
    std::ostringstream os;
    os << "ideal dev " << worst_ideal << ", mixed dev " << worst_mixed;
    detail = os.str();
    return worst_ideal <= 1e-10 && worst_mixed <= 1e-15;
  });

  run_criterion("4. mapping-table conjugation oracle", [](std::string& detail) {
    const auto start = std::chrono::steady_clock::now();
    std::mt19937_64 rng(0xacceb7);
    double worst = 0.0;
    int entries = 0;
    for (StateKind kind : {StateKind::Triplet2, StateKind::GHZ3, StateKind::GHZ4,
                           StateKind::Cluster4}) {
      for (const MappingEntry& entry : mapping_table(kind)) {
        ++entries;
        for (int s = 0; s < 50; ++s)
          worst = std::max(worst,
                           mapping_entry_error(entry, random_density_matrix(
                                                          qubit_count(kind), rng)));
      }
    }
    const double secs = elapsed_s(start);
    std::ostringstream os;
    os << entries << " entries, worst error " << worst << ", " << secs << " s";
    detail = os.str();
    return worst <= 1e-9 && secs < 10.0;
  });

  run_criterion("5. ideal unit acts as the identity target", [](std::string& detail) {
    const DDUnitSpec unit = DDUnitSpec::ur8();
    const FidelityResult f =
        sequence_fidelity(unit_propagator(unit, 0.0), target_propagator(unit.phases));
    std::ostringstream os;
    os << "infidelity " << f.infidelity << " (beta = " << target_beta(unit.phases) << ")";
    detail = os.str();
    return std::abs(f.infidelity) < 1e-10;
  });

  run_criterion("6. linear error accumulation (eps = 0.01)", [](std::string& detail) {
    const double eps = 0.01;
    const DDUnitSpec ur8 = DDUnitSpec::ur8();
    const double u1 = std::abs(schedule_propagator(standard_schedule(ur8, 1), eps)(0, 1));
    const double c_fit = u1 / eps;
    bool ok = true;
    double worst_rel = 0.0;
    for (int m = 1; m <= 9; ++m) {
      const double off = std::abs(schedule_propagator(standard_schedule(ur8, m), eps)(0, 1));
      const double residual = std::abs(off - m * c_fit * eps);
      // 1e-13 floor: the 8-pulse unit cancels uniform flip-angle error
      // exactly, so the fit runs at machine-noise scale
      if (residual > 0.15 * m * c_fit * eps + 1e-13) ok = false;
      if (m * c_fit * eps > 0.0) worst_rel = std::max(worst_rel, residual / (m * c_fit * eps));
    }
    // non-degenerate cross-check on the 4-pulse unit, |C| ~ 1e-3
    const DDUnitSpec ur4 = DDUnitSpec::ur(4);
    const double v1 = std::abs(schedule_propagator(standard_schedule(ur4, 1), eps)(0, 1));
    const double c4 = v1 / eps;
    bool ok4 = v1 > 1e-7;
    for (int m = 1; m <= 9; ++m) {
      const double off = std::abs(schedule_propagator(standard_schedule(ur4, m), eps)(0, 1));
      if (std::abs(off - m * c4 * eps) > 0.15 * m * c4 * eps) ok4 = false;
    }
    std::ostringstream os;
    os << "ur8 |C| " << c_fit << " worst rel dev " << worst_rel << "; ur4 |C| " << c4;
    detail = os.str();
    return ok && ok4;
  });

  run_criterion("7. randomization suppression statistics", [](std::string& detail) {
    const DDUnitSpec unit = DDUnitSpec::ur8();
    std::mt19937_64 rng(0x5eed);
    bool pr_ok = true;
    std::ostringstream os;
    for (int m : {4, 9, 100}) {
      double sum = 0.0;
      for (int i = 0; i < 10000; ++i) sum += std::norm(z_factor(pr_schedule(unit, m, rng)));
      const double mean = sum / 10000.0;
      if (std::abs(mean - 1.0 / m) > 0.05 / m) pr_ok = false;
      os << "E|Z|^2(M=" << m << ") = " << mean << " ";
    }
    bool cpr_ok = true;
    double worst = 0.0;
    for (int m = 2; m <= 9; ++m)
      for (int s = 0; s < 100; ++s) {
        const double z = std::abs(z_factor(cpr_schedule(unit, m, rng)));
        worst = std::max(worst, z);
        if (z > 1e-12) cpr_ok = false;
      }
    os << "| cpr worst |Z| = " << worst;
    detail = os.str();
    return pr_ok && cpr_ok;
  });

  run_criterion("8. protection benefit at the grid endpoints", [](std::string& detail) {
    std::ostringstream os;
    bool ok = true;

    // standard vs free under the default calibration
    struct Case {
      StateKind state;
      int m;
    };
    for (const Case& c : {Case{StateKind::Triplet2, 9}, Case{StateKind::GHZ3, 3}}) {
      const auto start = std::chrono::steady_clock::now();
      ExperimentConfig free_cfg = ExperimentConfig::defaults(c.state, RunMode::Free, 2024);
      free_cfg.m_max = c.m;
      ExperimentConfig std_cfg = free_cfg;
      std_cfg.mode = RunMode::Standard;
      const TimeSeries free_ts = run_experiment(free_cfg);
      const TimeSeries std_ts = run_experiment(std_cfg);
      for (std::size_t i = 0; i < free_ts.points.size(); ++i)
        if (std_ts.points[i].theta_mean < free_ts.points[i].theta_mean - 1e-12) ok = false;
      const PointStats free_pt = point_at(free_ts, c.m);
      const PointStats std_pt = point_at(std_ts, c.m);
      const double margin = std_pt.mean - free_pt.mean;
      const double se =
          std::sqrt(free_pt.stderr_mean * free_pt.stderr_mean +
                    std_pt.stderr_mean * std_pt.stderr_mean);
      const double secs = elapsed_s(start);
      if (!(margin >= 3.0 * se)) ok = false;
      if (secs >= 120.0) ok = false;
      os << to_string(c.state) << " m=" << c.m << ": std " << std_pt.mean << " free "
         << free_pt.mean << " margin/se " << (se > 0 ? margin / se : 1e9) << " (" << secs
         << " s); ";
    }

    // randomized vs standard with a strong flip-angle error, detuning off
    {
      ExperimentConfig std_cfg = ExperimentConfig::defaults(StateKind::Triplet2,
                                                            RunMode::Standard, 99);
      std_cfg.m_max = 9;
      std_cfg.pulse_error = {0.05, 0.0};
      std_cfg.noise.detuning_sigma = 0.0;
      ExperimentConfig cpr_cfg = std_cfg;
      cpr_cfg.mode = RunMode::CPR;
      ExperimentConfig pr_cfg = std_cfg;
      pr_cfg.mode = RunMode::PR;
      const PointStats std_pt = point_at(run_experiment(std_cfg), 9);
      const PointStats cpr_pt = point_at(run_experiment(cpr_cfg), 9);
      const PointStats pr_pt = point_at(run_experiment(pr_cfg), 9);
      const double se_cpr =
          std::sqrt(std_pt.stderr_mean * std_pt.stderr_mean +
                    cpr_pt.stderr_mean * cpr_pt.stderr_mean);
      const double se_pr = std::sqrt(std_pt.stderr_mean * std_pt.stderr_mean +
                                     pr_pt.stderr_mean * pr_pt.stderr_mean);
      if (!(cpr_pt.mean >= std_pt.mean - se_cpr)) ok = false;
      if (!(pr_pt.mean >= std_pt.mean - se_pr)) ok = false;
      os << "eps=0.05 m=9: cpr " << cpr_pt.mean << " pr " << pr_pt.mean << " std "
         << std_pt.mean;
    }
    detail = os.str();
    return ok;
  });

  run_criterion("9. sampled theta matches exact within 3 stderr", [](std::string& detail) {
    std::ostringstream os;
    bool ok = true;
    for (StateKind kind : {StateKind::Triplet2, StateKind::GHZ3, StateKind::GHZ4,
                           StateKind::Cluster4}) {
      NoiseParams noise = NoiseParams::calibrated(qubit_count(kind), 1234);
      const DensityMatrix rho = prepare_noisy(kind, noise, {0.001, 0.0});
      const double exact = entanglement_parameter_exact(rho, witness_operator(kind));
      int passes = 0;
      for (std::uint64_t seed = 0; seed < 100; ++seed) {
        std::mt19937_64 rng(seed);
        const SampledTheta s = entanglement_parameter_sampled(rho, kind, 8192, 0.0, rng);
        if (std::abs(s.estimate - exact) <= 3.0 * s.stderr_est) ++passes;
      }
      if (passes < 99) ok = false;
      os << to_string(kind) << " " << passes << "/100 ";
    }
    detail = os.str();
    return ok;
  });

  run_criterion("10. determinism: identical config, identical csv", [](std::string& detail) {
    ExperimentConfig cfg = ExperimentConfig::defaults(StateKind::Triplet2, RunMode::CPR, 42);
    cfg.m_max = 4;
    cfg.noise.trajectories = 25;
    cfg.measurement = MeasurementPath::Sampled;
    cfg.shots = 1024;
    const std::string a = csv_string(run_experiment(cfg), cfg);
    const std::string b = csv_string(run_experiment(cfg), cfg);
    std::ostringstream os;
    os << a.size() << " bytes" << (a == b ? ", identical" : ", DIFFER");
    detail = os.str();
    return !a.empty() && a == b;
  });

  if (g_failures == 0) {
    std::cout << "acceptance: all criteria passed" << std::endl;
    return 0;
  }
  std::cout << "acceptance: " << g_failures << " criterion(s) failed" << std::endl;
  return 1;
}
