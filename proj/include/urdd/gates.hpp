// Circuit-level gates used by state preparation and the witness mapping
// circuits: H, X, R_X, R_Y, CNOT, CZ.
#pragma once

#include "urdd/density_matrix.hpp"
#include "urdd/pulses.hpp"

#include <numbers>
#include <span>
#include <vector>

namespace urdd {

struct Gate {
  enum class Kind { H, X, RX, RY, CNOT, CZ };

  Kind kind;
  int q0;             // target (single-qubit) or control (CNOT) / first qubit (CZ)
  int q1 = -1;        // target of CNOT / second qubit of CZ
  double angle = 0.0; // RX/RY only

  static Gate h(int q) { return {Kind::H, q}; }
  static Gate x(int q) { return {Kind::X, q}; }
  static Gate rx(int q, double a) { return {Kind::RX, q, -1, a}; }
  static Gate ry(int q, double a) { return {Kind::RY, q, -1, a}; }
  static Gate cnot(int control, int target) { return {Kind::CNOT, control, target}; }
  static Gate cz(int a, int b) { return {Kind::CZ, a, b}; }

  bool two_qubit() const { return kind == Kind::CNOT || kind == Kind::CZ; }
};

inline Mat2 rotation_x(double theta) {
  const double c = std::cos(theta / 2.0), s = std::sin(theta / 2.0);
  Mat2 r;
  r << c, cplx(0, -s), cplx(0, -s), c;
  return r;
}

inline Mat2 rotation_y(double theta) {
  const double c = std::cos(theta / 2.0), s = std::sin(theta / 2.0);
  Mat2 r;
  r << c, -s, s, c;
  return r;
}

inline Mat2 hadamard() {
  Mat2 h;
  const double s = 1.0 / std::numbers::sqrt2;
  h << s, s, s, -s;
  return h;
}

inline Mat cnot_matrix() {
  Mat m = Mat::Identity(4, 4);
  m(2, 2) = 0;
  m(3, 3) = 0;
  m(2, 3) = 1;
  m(3, 2) = 1;
  return m;
}

inline Mat cz_matrix() {
  Mat m = Mat::Identity(4, 4);
  m(3, 3) = -1;
  return m;
}

// Ideal unitary of a gate together with its target list.
inline std::pair<Mat, std::vector<int>> gate_unitary(const Gate& g) {
  switch (g.kind) {
    case Gate::Kind::H: return {hadamard(), {g.q0}};
    case Gate::Kind::X: return {pauli_matrix(Pauli::X), {g.q0}};
    case Gate::Kind::RX: return {rotation_x(g.angle), {g.q0}};
    case Gate::Kind::RY: return {rotation_y(g.angle), {g.q0}};
    case Gate::Kind::CNOT: return {cnot_matrix(), {g.q0, g.q1}};
    case Gate::Kind::CZ: return {cz_matrix(), {g.q0, g.q1}};
  }
  throw std::logic_error("gate_unitary: bad kind");
}

inline DensityMatrix apply_gate(const DensityMatrix& rho, const Gate& g) {
  auto [u, targets] = gate_unitary(g);
  return apply_unitary(rho, u, targets);
}

inline DensityMatrix apply_circuit(const DensityMatrix& rho, std::span<const Gate> circuit) {
  DensityMatrix out = rho;
  for (const Gate& g : circuit) out = apply_gate(out, g);
  return out;
}

inline DensityMatrix apply_circuit(const DensityMatrix& rho, const std::vector<Gate>& circuit) {
  return apply_circuit(rho, std::span<const Gate>(circuit));
}

}  // namespace urdd
