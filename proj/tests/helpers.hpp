#pragma once

#include "urdd/density_matrix.hpp"

#include <random>

namespace test_helpers {

using urdd::Mat;
using urdd::Mat2;

inline double matrix_diff(const Mat& a, const Mat& b) { return urdd::max_abs(Mat(a - b)); }

// Largest entrywise difference after aligning global phase on the first
// entry of largest magnitude.
inline double diff_up_to_phase(const Mat& a, const Mat& b) {
  Eigen::Index bi = 0, bj = 0;
  double best = -1.0;
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      if (std::abs(a(i, j)) > best) {
        best = std::abs(a(i, j));
        bi = i;
        bj = j;
      }
  if (best < 1e-14 || std::abs(b(bi, bj)) < 1e-14) return matrix_diff(a, b);
  urdd::cplx phase = b(bi, bj) / a(bi, bj);
  phase /= std::abs(phase);
  return matrix_diff(Mat(a * phase), b);
}

inline urdd::DensityMatrix random_product_state(int n_qubits, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  urdd::Vec amps = urdd::Vec::Ones(1);
  for (int q = 0; q < n_qubits; ++q) {
    const double theta = std::acos(1.0 - 2.0 * unit(rng));
    const double phi = angle(rng);
    urdd::Vec one(2);
    one << std::cos(theta / 2.0),
        std::exp(urdd::cplx(0, phi)) * std::sin(theta / 2.0);
    urdd::Vec next(amps.size() * 2);
    for (Eigen::Index i = 0; i < amps.size(); ++i) {
      next(2 * i) = amps(i) * one(0);
      next(2 * i + 1) = amps(i) * one(1);
    }
    amps = next;
  }
  return urdd::DensityMatrix::from_pure(n_qubits, amps);
}

}  // namespace test_helpers
