// Universally robust dynamical-decoupling sequences: phase generation for
// arbitrary even order, repetition schedules with standard, randomized (PR)
// and correlated-randomized (CPR) global phases, and slot-level timelines.
#pragma once

#include "urdd/pulses.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <ostream>
#include <random>
#include <span>
#include <stdexcept>
#include <vector>

namespace urdd {

inline double reduce_angle(double a) {
  const double two_pi = 2.0 * std::numbers::pi;
  double r = std::fmod(a, two_pi);
  if (r < 0.0) r += two_pi;
  return r;
}

// Distance on the circle, in [0, pi]; the right metric for comparing
// mod-2pi reduced angles (0 and 2pi - eps are close).
inline double angle_distance(double a, double b) {
  return std::abs(std::remainder(a - b, 2.0 * std::numbers::pi));
}

// phi_k = (k-1)(k-2)/2 * Phi + (k-1) * phi2 (mod 2pi), with
// Phi = pi/m for n = 4m and Phi = 2m*pi/(2m+1) for n = 4m+2.
inline std::vector<double> urdd_phases(int n, double phi2) {
  if (n < 4 || n % 2 != 0) throw std::invalid_argument("urdd_phases: n must be even and >= 4");
  const double pi = std::numbers::pi;
  double big_phi;
  if (n % 4 == 0) {
    big_phi = pi / (n / 4);
  } else {
    const int m = (n - 2) / 4;
    big_phi = 2.0 * m * pi / (2 * m + 1);
  }
  std::vector<double> phases(static_cast<std::size_t>(n));
  for (int k = 1; k <= n; ++k)
    phases[static_cast<std::size_t>(k - 1)] =
        reduce_angle(0.5 * (k - 1) * (k - 2) * big_phi + (k - 1) * phi2);
  return phases;
}

// One repeating sequence unit: n pi pulses with fixed phases, delay tau
// between pulse centers and tau/2 padding at both ends.
struct DDUnitSpec {
  int n_pulses = 8;
  std::vector<double> phases;       // radians, reduced to [0, 2pi)
  double tau_ns = 70.0;
  double pulse_duration_ns = 35.5;

  static DDUnitSpec ur(int n, double phi2 = std::numbers::pi / 2.0, double tau_ns = 70.0,
                       double pulse_duration_ns = 35.5) {
    DDUnitSpec u;
    u.n_pulses = n;
    u.phases = urdd_phases(n, phi2);
    u.tau_ns = tau_ns;
    u.pulse_duration_ns = pulse_duration_ns;
    return u;
  }

  static DDUnitSpec ur8() { return ur(8); }

  void validate() const {
    if (n_pulses < 4 || n_pulses % 2 != 0)
      throw std::invalid_argument("DDUnitSpec: n_pulses must be even and >= 4");
    if (static_cast<int>(phases.size()) != n_pulses)
      throw std::invalid_argument("DDUnitSpec: phases size mismatch");
    for (double phi : phases)
      if (phi < 0.0 || phi >= 2.0 * std::numbers::pi)
        throw std::invalid_argument("DDUnitSpec: phases must be reduced to [0, 2pi)");
    if (tau_ns <= 0.0 || pulse_duration_ns <= 0.0)
      throw std::invalid_argument("DDUnitSpec: durations must be > 0");
  }

  // n pulses + (n-1) full delays + two tau/2 edge delays.
  double wall_time_ns() const { return n_pulses * (pulse_duration_ns + tau_ns); }

  // Delays are realized as tau/2 identity slots: two per gap, one per edge.
  int slot_count() const { return 3 * n_pulses; }
};

enum class DDMode { Standard, PR, CPR };

inline const char* to_string(DDMode m) {
  switch (m) {
    case DDMode::Standard: return "standard";
    case DDMode::PR: return "pr";
    case DDMode::CPR: return "cpr";
  }
  return "?";
}

struct DDSchedule {
  DDUnitSpec unit;
  DDMode mode = DDMode::Standard;
  std::vector<double> global_phases;  // Theta_{r,s}, one per repetition

  int repetitions() const { return static_cast<int>(global_phases.size()); }
};

// Z_{r,M} = (1/M) sum_s exp(-i Theta_{r,s})
inline cplx z_factor(const DDSchedule& schedule) {
  cplx z = 0.0;
  for (double theta : schedule.global_phases) z += std::exp(cplx(0.0, -theta));
  return z / static_cast<double>(schedule.global_phases.size());
}

inline DDSchedule standard_schedule(const DDUnitSpec& unit, int m, double theta = 0.0) {
  if (m < 1) throw std::invalid_argument("standard_schedule: m must be >= 1");
  DDSchedule s;
  s.unit = unit;
  s.mode = DDMode::Standard;
  s.global_phases.assign(static_cast<std::size_t>(m), reduce_angle(theta));
  return s;
}

// Independent uniform global phase per repetition.
inline DDSchedule pr_schedule(const DDUnitSpec& unit, int m, std::mt19937_64& rng) {
  if (m < 1) throw std::invalid_argument("pr_schedule: m must be >= 1");
  std::uniform_real_distribution<double> uniform(0.0, 2.0 * std::numbers::pi);
  DDSchedule s;
  s.unit = unit;
  s.mode = DDMode::PR;
  s.global_phases.resize(static_cast<std::size_t>(m));
  for (double& theta : s.global_phases) theta = uniform(rng);
  return s;
}

// Greedy pairs-first partition of m into blocks of 2 and 3; a single
// 3-block absorbs an odd remainder. m=5 -> {2,3}, m=9 -> {2,2,2,3}.
inline std::vector<int> cpr_block_sizes(int m) {
  if (m < 2) throw std::invalid_argument("cpr_block_sizes: m must be >= 2");
  std::vector<int> blocks;
  int pairs = m / 2;
  if (m % 2 == 1) {
    --pairs;  // replace one pair + remainder with a triple
    blocks.assign(static_cast<std::size_t>(pairs), 2);
    blocks.push_back(3);
  } else {
    blocks.assign(static_cast<std::size_t>(pairs), 2);
  }
  return blocks;
}

// Correlated randomization: each 2-block gets {theta, theta+pi}, each
// 3-block {theta, theta+2pi/3, theta+4pi/3} with theta uniform per block,
// so Z_{r,M} vanishes identically.
inline DDSchedule cpr_schedule(const DDUnitSpec& unit, int m, std::mt19937_64& rng) {
  if (m < 2) throw std::invalid_argument("cpr_schedule: m must be >= 2");
  std::uniform_real_distribution<double> uniform(0.0, 2.0 * std::numbers::pi);
  DDSchedule s;
  s.unit = unit;
  s.mode = DDMode::CPR;
  s.global_phases.reserve(static_cast<std::size_t>(m));
  const double pi = std::numbers::pi;
  for (int block : cpr_block_sizes(m)) {
    const double theta = uniform(rng);
    if (block == 2) {
      s.global_phases.push_back(reduce_angle(theta));
      s.global_phases.push_back(reduce_angle(theta + pi));
    } else {
      s.global_phases.push_back(reduce_angle(theta));
      s.global_phases.push_back(reduce_angle(theta + 2.0 * pi / 3.0));
      s.global_phases.push_back(reduce_angle(theta + 4.0 * pi / 3.0));
    }
  }
  return s;
}

struct TimedEvent {
  enum class Kind { Free, Pulse };
  Kind kind;
  double duration_ns;
  double phase = 0.0;  // pulse axis, already includes the unit's global phase

  bool operator==(const TimedEvent& o) const {
    return kind == o.kind && duration_ns == o.duration_ns && phase == o.phase;
  }
};

// Slot list of one unit: F(tau/2) P(phi1+Theta) F(tau/2) F(tau/2) P(phi2+Theta)
// ... P(phin+Theta) F(tau/2). 3n slots, wall time n*(pulse + tau).
inline std::vector<TimedEvent> build_unit_timeline(const DDUnitSpec& unit, double global_phase) {
  unit.validate();
  const double half = unit.tau_ns / 2.0;
  std::vector<TimedEvent> events;
  events.reserve(static_cast<std::size_t>(unit.slot_count()));
  events.push_back({TimedEvent::Kind::Free, half});
  for (int k = 0; k < unit.n_pulses; ++k) {
    if (k > 0) {
      events.push_back({TimedEvent::Kind::Free, half});
      events.push_back({TimedEvent::Kind::Free, half});
    }
    events.push_back({TimedEvent::Kind::Pulse, unit.pulse_duration_ns,
                      reduce_angle(unit.phases[static_cast<std::size_t>(k)] + global_phase)});
  }
  events.push_back({TimedEvent::Kind::Free, half});
  return events;
}

// Single-qubit propagator of one unit: detuning acts during free slots,
// pulses carry the flip-angle error. Noise-free apart from those knobs.
inline Mat2 unit_propagator(const DDUnitSpec& unit, double global_phase,
                            double flip_angle_error = 0.0, double detuning_rad_per_us = 0.0) {
  Mat2 u = Mat2::Identity();
  for (const TimedEvent& ev : build_unit_timeline(unit, global_phase)) {
    if (ev.kind == TimedEvent::Kind::Pulse) {
      u = pi_pulse(ev.phase, flip_angle_error) * u;
    } else if (detuning_rad_per_us != 0.0) {
      u = rotation_z(detuning_rad_per_us * ev.duration_ns * 1e-3) * u;
    }
  }
  return u;
}

inline Mat2 schedule_propagator(const DDSchedule& schedule, double flip_angle_error = 0.0,
                                double detuning_rad_per_us = 0.0) {
  Mat2 u = Mat2::Identity();
  for (double theta : schedule.global_phases)
    u = unit_propagator(schedule.unit, theta, flip_angle_error, detuning_rad_per_us) * u;
  return u;
}

// Plain-text log: one line per unit with the 1-based repetition index,
// the unit's global phase and the base pulse phases.
inline void write_schedule(std::ostream& os, const DDSchedule& schedule) {
  os.precision(17);
  for (std::size_t s = 0; s < schedule.global_phases.size(); ++s) {
    os << (s + 1) << ' ' << schedule.global_phases[s];
    for (double phi : schedule.unit.phases) os << ' ' << phi;
    os << '\n';
  }
}

}  // namespace urdd
