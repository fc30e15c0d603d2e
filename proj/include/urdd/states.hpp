// Benchmark entangled states: two-qubit triplet, three- and four-qubit GHZ,
// and the four-qubit linear cluster state, ideal and under preparation noise.
//
// The cluster state is kept in the local frame
//   (|0000> + |0011> + |1100> - |1111>) / 2
// (CZ-chain graph state conjugated by H on the outer qubits), the frame in
// which its stabilizer witness reaches 0.5.
#pragma once

#include "urdd/gates.hpp"
#include "urdd/noise.hpp"

#include <numbers>
#include <stdexcept>
#include <string_view>
#include <vector>

namespace urdd {

enum class StateKind { Triplet2, GHZ3, GHZ4, Cluster4 };

inline int qubit_count(StateKind kind) {
  switch (kind) {
    case StateKind::Triplet2: return 2;
    case StateKind::GHZ3: return 3;
    case StateKind::GHZ4: return 4;
    case StateKind::Cluster4: return 4;
  }
  throw std::logic_error("qubit_count: bad kind");
}

inline const char* to_string(StateKind kind) {
  switch (kind) {
    case StateKind::Triplet2: return "triplet2";
    case StateKind::GHZ3: return "ghz3";
    case StateKind::GHZ4: return "ghz4";
    case StateKind::Cluster4: return "cluster4";
  }
  return "?";
}

inline StateKind parse_state_kind(std::string_view s) {
  if (s == "triplet2") return StateKind::Triplet2;
  if (s == "ghz3") return StateKind::GHZ3;
  if (s == "ghz4") return StateKind::GHZ4;
  if (s == "cluster4") return StateKind::Cluster4;
  throw std::invalid_argument("unknown state kind: " + std::string(s));
}

inline std::vector<Gate> preparation_circuit(StateKind kind) {
  switch (kind) {
    case StateKind::Triplet2:
      // (|01> + |10>)/sqrt(2); the X on qubit 1 flips the Bell pair so <ZZ> = -1.
      return {Gate::h(0), Gate::cnot(0, 1), Gate::x(1)};
    case StateKind::GHZ3:
      return {Gate::h(0), Gate::cnot(0, 1), Gate::cnot(1, 2)};
    case StateKind::GHZ4:
      return {Gate::h(0), Gate::cnot(0, 1), Gate::cnot(1, 2), Gate::cnot(2, 3)};
    case StateKind::Cluster4:
      return {Gate::h(0), Gate::h(1), Gate::h(2), Gate::h(3), Gate::cz(0, 1),
              Gate::cz(1, 2), Gate::cz(2, 3), Gate::h(0), Gate::h(3)};
  }
  throw std::logic_error("preparation_circuit: bad kind");
}

inline DensityMatrix prepare_ideal(StateKind kind) {
  const int n = qubit_count(kind);
  Vec amps = Vec::Zero(1 << n);
  const double r2 = 1.0 / std::numbers::sqrt2;
  switch (kind) {
    case StateKind::Triplet2:
      amps(0b01) = r2;
      amps(0b10) = r2;
      break;
    case StateKind::GHZ3:
      amps(0b000) = r2;
      amps(0b111) = r2;
      break;
    case StateKind::GHZ4:
      amps(0b0000) = r2;
      amps(0b1111) = r2;
      break;
    case StateKind::Cluster4:
      amps(0b0000) = 0.5;
      amps(0b0011) = 0.5;
      amps(0b1100) = 0.5;
      amps(0b1111) = -0.5;
      break;
  }
  return DensityMatrix::from_pure(n, amps);
}

namespace detail {

// Native slots for the noisy path: H becomes RY(pi/2) then X so every
// single-qubit slot is a rotation whose angle picks up the flip-angle error.
inline std::vector<Gate> expand_native(const std::vector<Gate>& circuit) {
  const double pi = std::numbers::pi;
  std::vector<Gate> out;
  out.reserve(circuit.size() * 2);
  for (const Gate& g : circuit) {
    switch (g.kind) {
      case Gate::Kind::H:
        out.push_back(Gate::ry(g.q0, pi / 2.0));
        out.push_back(Gate::rx(g.q0, pi));
        break;
      case Gate::Kind::X:
        out.push_back(Gate::rx(g.q0, pi));
        break;
      default:
        out.push_back(g);
        break;
    }
  }
  return out;
}

}  // namespace detail

// Runs the preparation circuit with over-rotated single-qubit pulses
// (systematic flip-angle error) and per-slot T1/T2 idle noise on every
// qubit. Two-qubit gates are applied ideally.
inline DensityMatrix prepare_noisy(StateKind kind, const NoiseParams& noise,
                                   const PulseErrorModel& err) {
  noise.validate();
  err.validate();
  const int n = qubit_count(kind);
  if (static_cast<int>(noise.qubits.size()) < n)
    throw std::invalid_argument("prepare_noisy: noise params cover fewer qubits than the state");
  const double over = 1.0 + err.epsilon_systematic;

  DensityMatrix rho(n);
  for (const Gate& g : detail::expand_native(preparation_circuit(kind))) {
    switch (g.kind) {
      case Gate::Kind::RX:
        rho = apply_unitary(rho, rotation_x(g.angle * over), {g.q0});
        break;
      case Gate::Kind::RY:
        rho = apply_unitary(rho, rotation_y(g.angle * over), {g.q0});
        break;
      default:
        rho = apply_gate(rho, g);
        break;
    }
    for (int q = 0; q < n; ++q)
      rho = apply_kraus_channel(rho, idle_channel(noise.gate_time_ns, noise.qubits[q]), q);
  }
  return rho;
}

}  // namespace urdd
