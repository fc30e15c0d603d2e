// End-to-end protection runs: prepare a benchmark state, evolve it through
// free evolution or a repeated decoupling schedule under per-slot T1/T2
// noise, per-trajectory quasi-static detuning and flip-angle pulse errors,
// measure the entanglement parameter at every unit boundary and aggregate
// over trajectories.
//
// Each time point m is simulated as its own run (fresh schedule and draws),
// matching the measurement protocol where every duration is a separate job.
#pragma once

#include "urdd/dd.hpp"
#include "urdd/noise.hpp"
#include "urdd/states.hpp"
#include "urdd/witness.hpp"

#include <cmath>
#include <cstdint>
#include <iomanip>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace urdd {

enum class RunMode { Free, Standard, PR, CPR };

inline const char* to_string(RunMode m) {
  switch (m) {
    case RunMode::Free: return "free";
    case RunMode::Standard: return "standard";
    case RunMode::PR: return "pr";
    case RunMode::CPR: return "cpr";
  }
  return "?";
}

inline RunMode parse_run_mode(std::string_view s) {
  if (s == "free") return RunMode::Free;
  if (s == "standard") return RunMode::Standard;
  if (s == "pr") return RunMode::PR;
  if (s == "cpr") return RunMode::CPR;
  throw std::invalid_argument("unknown mode: " + std::string(s));
}

enum class MeasurementPath { Exact, Sampled };

// splitmix64 over the master seed and two stream ids; gives every
// (trajectory, time-point) pair its own independent generator.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (a + 1) + 0xbf58476d1ce4e5b9ULL * (b + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

struct ExperimentConfig {
  StateKind state = StateKind::Triplet2;
  RunMode mode = RunMode::Standard;
  int m_max = 9;
  int shots = 8192;
  NoiseParams noise;
  PulseErrorModel pulse_error;
  std::uint64_t seed = 0;
  MeasurementPath measurement = MeasurementPath::Exact;
  DDUnitSpec unit = DDUnitSpec::ur8();

  void validate() const {
    noise.validate();
    pulse_error.validate();
    unit.validate();
    if (m_max < 0) throw std::invalid_argument("ExperimentConfig: m_max must be >= 0");
    if (mode == RunMode::CPR && m_max < 2)
      throw std::invalid_argument("ExperimentConfig: CPR needs m_max >= 2");
    if (shots < 1) throw std::invalid_argument("ExperimentConfig: shots must be >= 1");
    if (static_cast<int>(noise.qubits.size()) < qubit_count(state))
      throw std::invalid_argument("ExperimentConfig: noise params cover fewer qubits than the state");
  }

  // Calibrated device draws derived from the master seed.
  static ExperimentConfig defaults(StateKind state, RunMode mode, std::uint64_t seed) {
    ExperimentConfig cfg;
    cfg.state = state;
    cfg.mode = mode;
    cfg.seed = seed;
    cfg.noise = NoiseParams::calibrated(qubit_count(state), mix_seed(seed, 0x646576696365ULL, 0));
    cfg.pulse_error = {0.001, 0.0};
    return cfg;
  }

  // Time points: unit boundaries m = 0..m_max; CPR skips m = 1, which has
  // no correlated phase assignment.
  std::vector<int> time_points() const {
    std::vector<int> ms;
    for (int m = 0; m <= m_max; ++m) {
      if (mode == RunMode::CPR && m == 1) continue;
      ms.push_back(m);
    }
    return ms;
  }
};

struct TimePoint {
  double time_us = 0.0;
  double theta_mean = 0.0;
  double theta_stderr = 0.0;
  int m = 0;
};

struct TimeSeries {
  std::vector<TimePoint> points;
};

struct TrajectoryDraws {
  std::vector<double> detuning_rad_per_us;  // per qubit, constant over the trajectory
  std::vector<double> pulse_epsilon;        // per qubit total flip-angle error
};

// Deterministic evolution through `unit_phases.size()` units given the
// trajectory's draws. Pulses act simultaneously on every qubit; when
// dd_active is false the pulse slots are idled instead (identical slot
// durations, so free evolution is time-matched to the protected runs).
// Detuning precesses only during free slots; T1/T2 channels act in every
// slot including the pulse slots.
inline DensityMatrix evolve_units(const DensityMatrix& initial, const DDUnitSpec& unit,
                                  std::span<const double> unit_phases, bool dd_active,
                                  const NoiseParams& noise, const TrajectoryDraws& draws) {
  const int n = initial.n_qubits();
  if (static_cast<int>(noise.qubits.size()) < n ||
      static_cast<int>(draws.detuning_rad_per_us.size()) < n ||
      static_cast<int>(draws.pulse_epsilon.size()) < n)
    throw std::invalid_argument("evolve_units: per-qubit parameters cover fewer qubits than the state");
  std::vector<KrausChannel> free_ch, pulse_ch;
  free_ch.reserve(static_cast<std::size_t>(n));
  pulse_ch.reserve(static_cast<std::size_t>(n));
  for (int q = 0; q < n; ++q) {
    free_ch.push_back(idle_channel(unit.tau_ns / 2.0, noise.qubits[static_cast<std::size_t>(q)]));
    pulse_ch.push_back(
        idle_channel(unit.pulse_duration_ns, noise.qubits[static_cast<std::size_t>(q)]));
  }
  DensityMatrix rho = initial;
  for (double theta : unit_phases) {
    for (const TimedEvent& ev : build_unit_timeline(unit, theta)) {
      const bool pulse_slot = ev.kind == TimedEvent::Kind::Pulse;
      if (pulse_slot && dd_active) {
        for (int q = 0; q < n; ++q)
          rho = apply_unitary(
              rho, pi_pulse(ev.phase, draws.pulse_epsilon[static_cast<std::size_t>(q)]), {q});
      } else {
        for (int q = 0; q < n; ++q) {
          const double delta = draws.detuning_rad_per_us[static_cast<std::size_t>(q)];
          if (delta != 0.0)
            rho = apply_unitary(rho, rotation_z(delta * ev.duration_ns * 1e-3), {q});
        }
      }
      const auto& channels = pulse_slot ? pulse_ch : free_ch;
      for (int q = 0; q < n; ++q)
        rho = apply_kraus_channel(rho, channels[static_cast<std::size_t>(q)], q);
    }
  }
  return rho;
}

inline TimeSeries run_experiment(const ExperimentConfig& cfg) {
  cfg.validate();
  const int n = qubit_count(cfg.state);
  const WitnessOperator w = witness_operator(cfg.state);
  const DensityMatrix prep = prepare_noisy(cfg.state, cfg.noise, cfg.pulse_error);
  const std::vector<int> ms = cfg.time_points();

  std::vector<std::vector<double>> thetas(ms.size());
  for (int traj = 0; traj < cfg.noise.trajectories; ++traj) {
    for (std::size_t mi = 0; mi < ms.size(); ++mi) {
      const int m = ms[mi];
      std::mt19937_64 rng(mix_seed(cfg.seed, static_cast<std::uint64_t>(traj),
                                   static_cast<std::uint64_t>(m)));
      TrajectoryDraws draws;
      draws.detuning_rad_per_us.resize(static_cast<std::size_t>(n));
      draws.pulse_epsilon.resize(static_cast<std::size_t>(n));
      for (int q = 0; q < n; ++q) {
        draws.detuning_rad_per_us[static_cast<std::size_t>(q)] =
            draw_detuning(rng, cfg.noise.detuning_sigma);
        draws.pulse_epsilon[static_cast<std::size_t>(q)] =
            cfg.pulse_error.epsilon_systematic +
            gaussian_draw(rng, cfg.pulse_error.epsilon_random_sigma);
      }

      DensityMatrix rho = prep;
      if (m > 0) {
        std::vector<double> phases;
        switch (cfg.mode) {
          case RunMode::Free:
          case RunMode::Standard:
            phases.assign(static_cast<std::size_t>(m), 0.0);
            break;
          case RunMode::PR:
            phases = pr_schedule(cfg.unit, m, rng).global_phases;
            break;
          case RunMode::CPR:
            phases = cpr_schedule(cfg.unit, m, rng).global_phases;
            break;
        }
        rho = evolve_units(prep, cfg.unit, phases, cfg.mode != RunMode::Free, cfg.noise, draws);
      }

      double theta;
      if (cfg.measurement == MeasurementPath::Exact) {
        theta = entanglement_parameter_exact(rho, w);
      } else {
        theta = entanglement_parameter_sampled(rho, cfg.state, cfg.shots, cfg.noise.readout_error,
                                               rng)
                    .estimate;
      }
      thetas[mi].push_back(theta);
    }
  }

  TimeSeries ts;
  const double unit_us = cfg.unit.wall_time_ns() * 1e-3;
  for (std::size_t mi = 0; mi < ms.size(); ++mi) {
    const auto& samples = thetas[mi];
    const double count = static_cast<double>(samples.size());
    double mean = 0.0;
    for (double t : samples) mean += t;
    mean /= count;
    double var = 0.0;
    for (double t : samples) var += (t - mean) * (t - mean);
    const double stderr_mean = samples.size() > 1 ? std::sqrt(var / (count - 1.0) / count) : 0.0;
    ts.points.push_back({ms[mi] * unit_us, mean, stderr_mean, ms[mi]});
  }
  return ts;
}

// CSV schema: time_us,m,mode,state,theta_mean,theta_stderr,shots,seed
// Floats carry 17 significant digits so a read-back reproduces the series
// bit-exactly. UTF-8, LF line endings.
inline void write_csv(std::ostream& os, const TimeSeries& ts, const ExperimentConfig& cfg) {
  os << "time_us,m,mode,state,theta_mean,theta_stderr,shots,seed\n";
  os << std::setprecision(17);
  for (const TimePoint& p : ts.points) {
    os << p.time_us << ',' << p.m << ',' << to_string(cfg.mode) << ',' << to_string(cfg.state)
       << ',' << p.theta_mean << ',' << p.theta_stderr << ',' << cfg.shots << ',' << cfg.seed
       << '\n';
  }
}

inline std::string csv_string(const TimeSeries& ts, const ExperimentConfig& cfg) {
  std::ostringstream oss;
  write_csv(oss, ts, cfg);
  return oss.str();
}

// Parses the numeric columns back into a TimeSeries (mode/state/shots/seed
// are metadata, identical on every row).
inline TimeSeries read_csv(std::istream& is) {
  TimeSeries ts;
  std::string line;
  if (!std::getline(is, line)) return ts;
  if (line.rfind("time_us,", 0) != 0) throw std::runtime_error("read_csv: bad header");
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::vector<std::string> fields;
    std::stringstream ss(line);
    std::string field;
    while (std::getline(ss, field, ',')) fields.push_back(field);
    if (fields.size() != 8) throw std::runtime_error("read_csv: bad row");
    TimePoint p;
    p.time_us = std::stod(fields[0]);
    p.m = std::stoi(fields[1]);
    p.theta_mean = std::stod(fields[4]);
    p.theta_stderr = std::stod(fields[5]);
    ts.points.push_back(p);
  }
  return ts;
}

}  // namespace urdd
