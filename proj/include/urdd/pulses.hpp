// Single-qubit gate matrices in the device parameterization and the
// pi pulses used by the decoupling sequences, with flip-angle errors.
#pragma once

#include "urdd/linalg.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace urdd {

// Flip-angle (over-rotation) error: a nominal pi pulse rotates by
// pi*(1 + epsilon). The systematic part is fixed per experiment, the
// random part is drawn once per trajectory.
struct PulseErrorModel {
  double epsilon_systematic = 0.0;
  double epsilon_random_sigma = 0.0;

  void validate() const {
    if (std::abs(epsilon_systematic) >= 0.5)
      throw std::invalid_argument("PulseErrorModel: |epsilon_systematic| must be < 0.5");
    if (epsilon_random_sigma < 0.0 || epsilon_random_sigma >= 0.5)
      throw std::invalid_argument("PulseErrorModel: epsilon_random_sigma must be in [0, 0.5)");
  }
};

// G(alpha, beta, gamma) =
//   [ cos(a/2)              -e^{i gamma} sin(a/2)      ]
//   [ e^{i beta} sin(a/2)    e^{i(beta+gamma)} cos(a/2) ]
inline Mat2 gate_matrix(double alpha, double beta, double gamma) {
  const double c = std::cos(alpha / 2.0);
  const double s = std::sin(alpha / 2.0);
  Mat2 g;
  g(0, 0) = c;
  g(0, 1) = -std::exp(cplx(0, gamma)) * s;
  g(1, 0) = std::exp(cplx(0, beta)) * s;
  g(1, 1) = std::exp(cplx(0, beta + gamma)) * c;
  return g;
}

// Rotation by pi*(1 + e) about the equatorial axis cos(phi) X + sin(phi) Y.
// For e = 0 this is G(pi, phi - pi/2, pi/2 - phi), the device's pi pulse.
inline Mat2 pi_pulse(double phi, double flip_angle_error = 0.0) {
  const double pi = std::numbers::pi;
  return gate_matrix(pi * (1.0 + flip_angle_error), phi - pi / 2.0, pi / 2.0 - phi);
}

inline Mat2 pi_pulse(double phi, const PulseErrorModel& err, double trajectory_epsilon) {
  return pi_pulse(phi, err.epsilon_systematic + trajectory_epsilon);
}

// exp(-i theta Z / 2); free precession by a z detuning.
inline Mat2 rotation_z(double theta) {
  Mat2 r = Mat2::Zero();
  r(0, 0) = std::exp(cplx(0, -theta / 2.0));
  r(1, 1) = std::exp(cplx(0, theta / 2.0));
  return r;
}

}  // namespace urdd
