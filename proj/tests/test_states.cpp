#include "urdd/states.hpp"

#include "urdd/witness.hpp"

#include <catch2/catch.hpp>

#include "helpers.hpp"

using namespace urdd;
using test_helpers::matrix_diff;

namespace {
const StateKind kAll[] = {StateKind::Triplet2, StateKind::GHZ3, StateKind::GHZ4,
                          StateKind::Cluster4};
}

TEST_CASE("ideal states are pure with theta exactly one half", "[states]") {
  for (StateKind kind : kAll) {
    DensityMatrix rho = prepare_ideal(kind);
    REQUIRE(rho.n_qubits() == qubit_count(kind));
    REQUIRE(rho.purity() == Approx(1.0).margin(1e-10));
    REQUIRE(entanglement_parameter_exact(rho, witness_operator(kind)) ==
            Approx(0.5).margin(1e-10));
  }
}

TEST_CASE("triplet correlators", "[states]") {
  DensityMatrix rho = prepare_ideal(StateKind::Triplet2);
  REQUIRE(expectation_pauli(rho, PauliString::parse("XX")) == Approx(1.0).margin(1e-12));
  REQUIRE(expectation_pauli(rho, PauliString::parse("YY")) == Approx(1.0).margin(1e-12));
  REQUIRE(expectation_pauli(rho, PauliString::parse("ZZ")) == Approx(-1.0).margin(1e-12));
}

TEST_CASE("ghz3 correlators", "[states]") {
  DensityMatrix rho = prepare_ideal(StateKind::GHZ3);
  REQUIRE(expectation_pauli(rho, PauliString::parse("XXX")) == Approx(1.0).margin(1e-12));
  for (const char* zz : {"IZZ", "ZIZ", "ZZI"})
    REQUIRE(expectation_pauli(rho, PauliString::parse(zz)) == Approx(1.0).margin(1e-12));
  for (const char* odd : {"XYY", "YXY", "YYX"})
    REQUIRE(expectation_pauli(rho, PauliString::parse(odd)) == Approx(-1.0).margin(1e-12));
}

TEST_CASE("preparation circuits reproduce the ideal states", "[states]") {
  for (StateKind kind : kAll) {
    DensityMatrix from_circuit =
        apply_circuit(DensityMatrix(qubit_count(kind)), preparation_circuit(kind));
    REQUIRE(matrix_diff(from_circuit.data(), prepare_ideal(kind).data()) < 1e-12);
  }
}

TEST_CASE("noisy preparation with zero noise equals the ideal state", "[states]") {
  for (StateKind kind : kAll) {
    DensityMatrix noisy =
        prepare_noisy(kind, NoiseParams::noiseless(qubit_count(kind)), PulseErrorModel{});
    REQUIRE(matrix_diff(noisy.data(), prepare_ideal(kind).data()) < 1e-12);
  }
}

TEST_CASE("calibrated preparation loses some entanglement", "[states]") {
  const PulseErrorModel err{0.001, 0.0};

  DensityMatrix triplet =
      prepare_noisy(StateKind::Triplet2, NoiseParams::calibrated(2, 11), err);
  const double theta2 =
      entanglement_parameter_exact(triplet, witness_operator(StateKind::Triplet2));
  REQUIRE(theta2 > 0.40);
  REQUIRE(theta2 < 0.50);

  DensityMatrix ghz4 = prepare_noisy(StateKind::GHZ4, NoiseParams::calibrated(4, 11), err);
  const double theta4 = entanglement_parameter_exact(ghz4, witness_operator(StateKind::GHZ4));
  REQUIRE(theta4 > 0.25);
  REQUIRE(theta4 < 0.50);
}

TEST_CASE("prep theta decreases monotonically with noise strength", "[states]") {
  // sweep: scale 1/T1 and 1/T2 together with the over-rotation error
  const double scales[] = {1.0, 4.0, 16.0};
  const double epsilons[] = {0.001, 0.01, 0.05};
  double previous = 1.0;
  for (int i = 0; i < 3; ++i) {
    NoiseParams noise = NoiseParams::calibrated(4, 3);
    for (auto& q : noise.qubits) {
      q.t1_us /= scales[i];
      q.t2_us /= scales[i];
    }
    DensityMatrix rho = prepare_noisy(StateKind::GHZ4, noise, {epsilons[i], 0.0});
    const double theta = entanglement_parameter_exact(rho, witness_operator(StateKind::GHZ4));
    REQUIRE(theta < previous);
    previous = theta;
  }
}

TEST_CASE("state kind round trip", "[states]") {
  for (StateKind kind : kAll) REQUIRE(parse_state_kind(to_string(kind)) == kind);
  REQUIRE_THROWS_AS(parse_state_kind("bell"), std::invalid_argument);
}
