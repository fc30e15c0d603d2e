// Calibrated device noise: T1 amplitude damping, T2 dephasing as Kraus
// channels, and quasi-static z-detuning draws.
//
// Two-layer model: Markovian T1/T2 channels are applied per timing slot,
// while a per-trajectory Gaussian detuning (constant within a trajectory)
// supplies the slow dephasing component that pulse trains refocus.
#pragma once

#include "urdd/kraus.hpp"

#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <random>
#include <stdexcept>
#include <vector>

namespace urdd {

// Quasi-static ensemble coherence exp(-sigma^2 t^2 / 2) halves at 3 us.
inline const double kDefaultDetuningSigma = std::sqrt(2.0 * std::numbers::ln2) / 3.0;  // rad/us

struct QubitRelaxation {
  double t1_us = std::numeric_limits<double>::infinity();
  double t2_us = std::numeric_limits<double>::infinity();
};

struct NoiseParams {
  std::vector<QubitRelaxation> qubits;
  double gate_time_ns = 35.5;
  double readout_error = 0.01;
  double detuning_sigma = kDefaultDetuningSigma;  // rad/us
  int trajectories = 200;

  void validate() const {
    if (qubits.empty()) throw std::invalid_argument("NoiseParams: no qubits");
    for (const auto& q : qubits) {
      if (!(q.t1_us > 0.0) || !(q.t2_us > 0.0))
        throw std::invalid_argument("NoiseParams: relaxation times must be > 0");
      if (q.t2_us > 2.0 * q.t1_us)
        throw std::invalid_argument("NoiseParams: t2 > 2*t1 is unphysical");
    }
    if (gate_time_ns <= 0.0) throw std::invalid_argument("NoiseParams: gate_time must be > 0");
    if (readout_error < 0.0 || readout_error > 0.5)
      throw std::invalid_argument("NoiseParams: readout_error must be in [0, 0.5]");
    if (detuning_sigma < 0.0) throw std::invalid_argument("NoiseParams: detuning_sigma must be >= 0");
    if (trajectories < 1) throw std::invalid_argument("NoiseParams: trajectories must be >= 1");
  }

  // Per-qubit T1 in [126, 151] us and T2 in [50, 66] us, drawn once at
  // config time and then fixed.
  static NoiseParams calibrated(int n_qubits, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> t1(126.0, 151.0);
    std::uniform_real_distribution<double> t2(50.0, 66.0);
    NoiseParams p;
    p.qubits.resize(static_cast<std::size_t>(n_qubits));
    for (auto& q : p.qubits) {
      q.t1_us = t1(rng);
      q.t2_us = t2(rng);
    }
    return p;
  }

  static NoiseParams noiseless(int n_qubits) {
    NoiseParams p;
    p.qubits.resize(static_cast<std::size_t>(n_qubits));
    p.readout_error = 0.0;
    p.detuning_sigma = 0.0;
    return p;
  }
};

// Amplitude damping (gamma = 1 - exp(-t/T1)) composed with pure dephasing
// at rate 1/Tphi = 1/T2 - 1/(2 T1), so the off-diagonal decay factor over
// the slot is exactly exp(-t/T2).
inline KrausChannel idle_channel(double duration_ns, const QubitRelaxation& q) {
  if (duration_ns < 0.0) throw std::invalid_argument("idle_channel: negative duration");
  if (q.t2_us > 2.0 * q.t1_us) throw std::invalid_argument("idle_channel: t2 > 2*t1 is unphysical");
  const double t_us = duration_ns * 1e-3;
  const double gamma = 1.0 - std::exp(-t_us / q.t1_us);
  const double inv_tphi = 1.0 / q.t2_us - 0.5 / q.t1_us;
  const double dephase_factor = std::exp(-t_us * inv_tphi);  // 1 - 2p
  const double p_flip = 0.5 * (1.0 - dephase_factor);

  KrausChannel damping;
  {
    Mat2 k0 = Mat2::Zero(), k1 = Mat2::Zero();
    k0(0, 0) = 1.0;
    k0(1, 1) = std::sqrt(1.0 - gamma);
    k1(0, 1) = std::sqrt(gamma);
    damping.kraus_ops.push_back(k0);
    if (gamma > 0.0) damping.kraus_ops.push_back(k1);
  }
  KrausChannel dephasing;
  {
    Mat2 k0 = Mat2::Identity() * std::sqrt(1.0 - p_flip);
    dephasing.kraus_ops.push_back(k0);
    if (p_flip > 0.0) {
      Mat2 kz = Mat2::Zero();
      kz(0, 0) = std::sqrt(p_flip);
      kz(1, 1) = -std::sqrt(p_flip);
      dephasing.kraus_ops.push_back(kz);
    }
  }
  return compose(damping, dephasing);
}

// Mean-zero Gaussian draw; sigma = 0 short-circuits without touching the
// generator state.
inline double gaussian_draw(std::mt19937_64& rng, double sigma) {
  if (sigma < 0.0) throw std::invalid_argument("gaussian_draw: sigma must be >= 0");
  if (sigma == 0.0) return 0.0;
  std::normal_distribution<double> g(0.0, sigma);
  return g(rng);
}

// Quasi-static detuning sample in rad/us.
inline double draw_detuning(std::mt19937_64& rng, double sigma) { return gaussian_draw(rng, sigma); }

}  // namespace urdd
