// First-order error-accumulation model for repeated sequence units and the
// sequence fidelity measure. Used as an independent cross-check on the
// pulse-level simulation: standard repetition accumulates the unit error
// linearly, randomized repetition scales it by the Z factor of the phases.
#pragma once

#include "urdd/dd.hpp"

#include <complex>
#include <span>
#include <stdexcept>

namespace urdd {

struct ErrorModelParams {
  cplx c;               // structure constant of one unit (fit, not derived)
  double epsilon = 0.0; // error magnitude; model is first order in epsilon
};

// [[1, i C eps], [i C* eps, 1]]: one unit to first order. Not unitary;
// these matrices are compared entrywise, never evolved.
inline Mat2 unit_error_propagator(const ErrorModelParams& p) {
  Mat2 u = Mat2::Identity();
  u(0, 1) = cplx(0, 1) * p.c * p.epsilon;
  u(1, 0) = cplx(0, 1) * std::conj(p.c) * p.epsilon;
  return u;
}

// M repetitions: off-diagonal i M C eps for a standard schedule, scaled by
// Z_{r,M} when the repetition phases are randomized.
inline Mat2 accumulated_propagator(const ErrorModelParams& p, const DDSchedule& schedule) {
  const double m = static_cast<double>(schedule.repetitions());
  cplx z = 1.0;
  if (schedule.mode != DDMode::Standard) z = z_factor(schedule);
  Mat2 u = Mat2::Identity();
  u(0, 1) = cplx(0, 1) * z * m * p.c * p.epsilon;
  u(1, 0) = cplx(0, 1) * std::conj(z) * m * std::conj(p.c) * p.epsilon;
  return u;
}

struct FidelityResult {
  double fidelity = 0.0;
  double infidelity = 0.0;
};

// F = |Tr(U_target^dag U_seq)| / 2
inline FidelityResult sequence_fidelity(const Mat2& u_seq, const Mat2& u_target) {
  const double f = 0.5 * std::abs((u_target.adjoint() * u_seq).trace());
  return {f, 1.0 - f};
}

// beta = 2 sum_k (phi_{2k} - phi_{2k-1})
inline double target_beta(std::span<const double> phases) {
  if (phases.size() % 2 != 0) throw std::invalid_argument("target_beta: odd phase list");
  double beta = 0.0;
  for (std::size_t k = 0; k + 1 < phases.size(); k += 2) beta += phases[k + 1] - phases[k];
  return 2.0 * beta;
}

// U0 = (-1)^{n/2} exp(i beta Z / 2): the ideal action of one n-pulse unit.
inline Mat2 target_propagator(std::span<const double> phases) {
  const double beta = target_beta(phases);
  const double sign = (phases.size() / 2) % 2 == 0 ? 1.0 : -1.0;
  Mat2 u = Mat2::Zero();
  u(0, 0) = sign * std::exp(cplx(0, beta / 2.0));
  u(1, 1) = sign * std::exp(cplx(0, -beta / 2.0));
  return u;
}

inline Mat2 target_propagator(const std::vector<double>& phases) {
  return target_propagator(std::span<const double>(phases));
}

}  // namespace urdd
