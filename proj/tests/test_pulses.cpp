#include "urdd/pulses.hpp"

#include "urdd/pauli.hpp"

#include <catch2/catch.hpp>

#include "helpers.hpp"

#include <numbers>
#include <random>

using namespace urdd;
using test_helpers::diff_up_to_phase;
using test_helpers::matrix_diff;

namespace {
const double pi = std::numbers::pi;

// exp(-i (theta/2) (cos phi X + sin phi Y)) in closed form
Mat2 axis_rotation(double phi, double theta) {
  const double c = std::cos(theta / 2.0), s = std::sin(theta / 2.0);
  Mat2 axis = std::cos(phi) * pauli_matrix(Pauli::X) + std::sin(phi) * pauli_matrix(Pauli::Y);
  return c * Mat2::Identity() - cplx(0, 1) * s * axis;
}
}  // namespace

TEST_CASE("gate matrix special values", "[pulses]") {
  REQUIRE(matrix_diff(gate_matrix(0, 0, 0), Mat2::Identity()) < 1e-15);

  Mat2 minus_ix;
  minus_ix << 0, cplx(0, -1), cplx(0, -1), 0;
  REQUIRE(matrix_diff(gate_matrix(pi, -pi / 2, pi / 2), minus_ix) < 1e-15);

  Mat2 hadamard;
  hadamard << 1, 1, 1, -1;
  hadamard /= std::numbers::sqrt2;
  REQUIRE(diff_up_to_phase(gate_matrix(pi / 2, 0, pi), hadamard) < 1e-15);
}

TEST_CASE("gate matrix is unitary for random parameters", "[pulses]") {
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> angle(-2.0 * pi, 2.0 * pi);
  for (int i = 0; i < 1000; ++i) {
    Mat2 g = gate_matrix(angle(rng), angle(rng), angle(rng));
    REQUIRE(is_unitary(g, 1e-12));
  }
}

TEST_CASE("pi pulse about x", "[pulses]") {
  Mat2 p = pi_pulse(0.0);
  Mat2 minus_ix;
  minus_ix << 0, cplx(0, -1), cplx(0, -1), 0;
  REQUIRE(matrix_diff(p, minus_ix) < 1e-15);
  // squares to the identity up to global phase
  REQUIRE(diff_up_to_phase(Mat2(p * p), Mat2::Identity()) < 1e-14);
}

TEST_CASE("pi pulse about y flips the ground state", "[pulses]") {
  Mat2 p = pi_pulse(pi / 2);
  Eigen::Vector2cd flipped = p * Eigen::Vector2cd(1, 0);
  REQUIRE(std::abs(flipped(1)) == Approx(1.0).margin(1e-14));
  REQUIRE(std::abs(flipped(0)) < 1e-14);
}

TEST_CASE("flip-angle error reduces the transition probability", "[pulses]") {
  Mat2 p = pi_pulse(0.0, 0.05);
  const double transition = std::norm(p(1, 0));
  REQUIRE(transition == Approx(std::pow(std::sin(pi * 1.05 / 2.0), 2)).margin(1e-12));
  REQUIRE(transition == Approx(0.99384).margin(1e-5));
}

TEST_CASE("pi pulse equals the closed-form axis rotation", "[pulses]") {
  std::mt19937_64 rng(13);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * pi);
  for (int i = 0; i < 100; ++i) {
    const double phi = angle(rng);
    REQUIRE(diff_up_to_phase(pi_pulse(phi), axis_rotation(phi, pi)) < 1e-10);
  }
  // with error the rotation angle scales to pi (1 + e)
  for (double e : {-0.1, 0.03, 0.2}) {
    const double phi = angle(rng);
    REQUIRE(diff_up_to_phase(pi_pulse(phi, e), axis_rotation(phi, pi * (1.0 + e))) < 1e-10);
  }
}

TEST_CASE("error model composes systematic and trajectory parts", "[pulses]") {
  PulseErrorModel err{0.02, 0.0};
  REQUIRE(matrix_diff(pi_pulse(0.3, err, 0.01), pi_pulse(0.3, 0.03)) < 1e-15);
  PulseErrorModel bad{0.6, 0.0};
  REQUIRE_THROWS_AS(bad.validate(), std::invalid_argument);
}
