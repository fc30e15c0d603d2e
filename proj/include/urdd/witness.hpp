// Entanglement witnesses for the benchmark states, the entanglement
// parameter theta = -Tr[W rho], and the single-qubit-readout measurement
// path: every Pauli term is conjugated by a small CNOT/rotation circuit
// onto a Z on one qubit, then that qubit is sampled.
//
// Each witness is the stabilizer witness I/2 - |psi><psi| of its target
// state, expanded in Pauli strings with exact rational coefficients.
#pragma once

#include "urdd/gates.hpp"
#include "urdd/states.hpp"

#include <cmath>
#include <numbers>
#include <ostream>
#include <random>
#include <string>
#include <vector>

namespace urdd {

struct Rational {
  int num = 0;
  int den = 1;

  double value() const { return static_cast<double>(num) / den; }

  std::string str() const {
    if (num % den == 0) return std::to_string(num / den);
    return std::to_string(num) + "/" + std::to_string(den);
  }
};

struct WitnessTerm {
  Rational coeff;
  PauliString pauli;
};

struct WitnessOperator {
  int n_qubits = 0;
  Rational constant;               // coefficient on the identity string
  std::vector<WitnessTerm> terms;  // non-identity Pauli terms

  Mat matrix() const {
    Mat m = constant.value() * Mat::Identity(1 << n_qubits, 1 << n_qubits);
    for (const WitnessTerm& t : terms) m += t.coeff.value() * t.pauli.matrix();
    return m;
  }
};

struct MappingEntry {
  PauliString term;
  std::vector<Gate> unitary;  // circuit order (first gate applied first)
  int readout_qubit = 0;
};

namespace detail {

struct TermSpec {
  int coeff_num;  // numerator over the witness's common denominator
  const char* pauli;
  std::vector<Gate> gates;
  int readout;
};

inline const std::vector<TermSpec>& term_specs(StateKind kind) {
  const double p = std::numbers::pi;
  static const std::vector<TermSpec> triplet = {
      {-1, "XX", {Gate::ry(0, p / 2), Gate::ry(1, p / 2), Gate::cnot(0, 1)}, 1},
      {-1, "YY", {Gate::rx(0, -p / 2), Gate::rx(1, -p / 2), Gate::cnot(0, 1)}, 1},
      {+1, "ZZ", {Gate::cnot(0, 1)}, 1},
  };
  static const std::vector<TermSpec> ghz3 = {
      {-1, "IZZ", {Gate::cnot(1, 2)}, 2},
      {-1, "ZIZ", {Gate::cnot(0, 2)}, 2},
      {-1, "ZZI", {Gate::cnot(0, 1)}, 1},
      {-1, "XXX",
       {Gate::ry(0, -p / 2), Gate::ry(1, -p / 2), Gate::cnot(0, 1), Gate::ry(2, -p / 2),
        Gate::cnot(1, 2)},
       2},
      {+1, "XYY",
       {Gate::ry(0, -p / 2), Gate::rx(1, p / 2), Gate::cnot(0, 1), Gate::rx(2, p / 2),
        Gate::cnot(1, 2)},
       2},
      {+1, "YXY",
       {Gate::rx(0, p / 2), Gate::ry(1, -p / 2), Gate::cnot(0, 1), Gate::rx(2, p / 2),
        Gate::cnot(1, 2)},
       2},
      {+1, "YYX",
       {Gate::rx(0, p / 2), Gate::rx(1, p / 2), Gate::cnot(0, 1), Gate::ry(2, -p / 2),
        Gate::cnot(1, 2)},
       2},
  };
  static const std::vector<TermSpec> ghz4 = {
      {-1, "IIZZ", {Gate::cnot(2, 3)}, 3},
      {-1, "IZIZ", {Gate::cnot(1, 3)}, 3},
      {-1, "IZZI", {Gate::cnot(1, 2)}, 2},
      {-1, "ZIIZ", {Gate::cnot(0, 3)}, 3},
      {-1, "ZIZI", {Gate::cnot(0, 2)}, 2},
      {-1, "ZZII", {Gate::cnot(0, 1)}, 1},
      {-1, "ZZZZ", {Gate::cnot(0, 1), Gate::cnot(1, 2), Gate::cnot(2, 3)}, 3},
      {-1, "XXXX",
       {Gate::ry(0, -p / 2), Gate::ry(1, -p / 2), Gate::cnot(0, 1), Gate::ry(2, -p / 2),
        Gate::cnot(1, 2), Gate::ry(3, -p / 2), Gate::cnot(2, 3)},
       3},
      {-1, "YYYY",
       {Gate::rx(0, p / 2), Gate::rx(1, p / 2), Gate::cnot(0, 1), Gate::rx(2, p / 2),
        Gate::cnot(1, 2), Gate::rx(3, p / 2), Gate::cnot(2, 3)},
       3},
      {+1, "XXYY",
       {Gate::ry(0, -p / 2), Gate::ry(1, -p / 2), Gate::cnot(0, 1), Gate::rx(2, p / 2),
        Gate::cnot(1, 2), Gate::rx(3, p / 2), Gate::cnot(2, 3)},
       3},
      {+1, "XYXY",
       {Gate::ry(0, -p / 2), Gate::rx(1, p / 2), Gate::cnot(0, 1), Gate::ry(2, -p / 2),
        Gate::cnot(1, 2), Gate::rx(3, p / 2), Gate::cnot(2, 3)},
       3},
      {+1, "XYYX",
       {Gate::ry(0, -p / 2), Gate::rx(1, p / 2), Gate::cnot(0, 1), Gate::rx(2, p / 2),
        Gate::cnot(1, 2), Gate::ry(3, -p / 2), Gate::cnot(2, 3)},
       3},
      {+1, "YXXY",
       {Gate::rx(0, p / 2), Gate::ry(1, -p / 2), Gate::cnot(0, 1), Gate::ry(2, -p / 2),
        Gate::cnot(1, 2), Gate::rx(3, p / 2), Gate::cnot(2, 3)},
       3},
      {+1, "YXYX",
       {Gate::rx(0, p / 2), Gate::ry(1, -p / 2), Gate::cnot(0, 1), Gate::rx(2, p / 2),
        Gate::cnot(1, 2), Gate::ry(3, -p / 2), Gate::cnot(2, 3)},
       3},
      {+1, "YYXX",
       {Gate::rx(0, p / 2), Gate::rx(1, p / 2), Gate::cnot(0, 1), Gate::ry(2, -p / 2),
        Gate::cnot(1, 2), Gate::ry(3, -p / 2), Gate::cnot(2, 3)},
       3},
  };
  static const std::vector<TermSpec> cluster4 = {
      {-1, "IIZZ", {Gate::cnot(2, 3)}, 3},
      {-1, "ZZII", {Gate::cnot(0, 1)}, 1},
      {-1, "ZZZZ", {Gate::cnot(0, 1), Gate::cnot(1, 2), Gate::cnot(2, 3)}, 3},
      {-1, "XYXY",
       {Gate::ry(0, -p / 2), Gate::rx(1, p / 2), Gate::cnot(0, 1), Gate::ry(2, -p / 2),
        Gate::cnot(1, 2), Gate::rx(3, p / 2), Gate::cnot(2, 3)},
       3},
      {-1, "XYYX",
       {Gate::ry(0, -p / 2), Gate::rx(1, p / 2), Gate::cnot(0, 1), Gate::rx(2, p / 2),
        Gate::cnot(1, 2), Gate::ry(3, -p / 2), Gate::cnot(2, 3)},
       3},
      {-1, "YXXY",
       {Gate::rx(0, p / 2), Gate::ry(1, -p / 2), Gate::cnot(0, 1), Gate::ry(2, -p / 2),
        Gate::cnot(1, 2), Gate::rx(3, p / 2), Gate::cnot(2, 3)},
       3},
      {-1, "YXYX",
       {Gate::rx(0, p / 2), Gate::ry(1, -p / 2), Gate::cnot(0, 1), Gate::rx(2, p / 2),
        Gate::cnot(1, 2), Gate::ry(3, -p / 2), Gate::cnot(2, 3)},
       3},
      {-1, "IZXX", {Gate::ry(2, -p / 2), Gate::cnot(1, 2), Gate::ry(3, -p / 2), Gate::cnot(2, 3)}, 3},
      {-1, "ZIXX", {Gate::ry(2, -p / 2), Gate::cnot(0, 2), Gate::ry(3, -p / 2), Gate::cnot(2, 3)}, 3},
      {-1, "XXIZ", {Gate::ry(0, -p / 2), Gate::ry(1, -p / 2), Gate::cnot(0, 1), Gate::cnot(1, 3)}, 3},
      {-1, "XXZI", {Gate::ry(0, -p / 2), Gate::ry(1, -p / 2), Gate::cnot(0, 1), Gate::cnot(1, 2)}, 2},
      {+1, "IZYY", {Gate::rx(2, p / 2), Gate::cnot(1, 2), Gate::rx(3, p / 2), Gate::cnot(2, 3)}, 3},
      {+1, "ZIYY", {Gate::rx(2, p / 2), Gate::cnot(0, 2), Gate::rx(3, p / 2), Gate::cnot(2, 3)}, 3},
      {+1, "YYIZ", {Gate::rx(0, p / 2), Gate::rx(1, p / 2), Gate::cnot(0, 1), Gate::cnot(1, 3)}, 3},
      {+1, "YYZI", {Gate::rx(0, p / 2), Gate::rx(1, p / 2), Gate::cnot(0, 1), Gate::cnot(1, 2)}, 2},
  };
  switch (kind) {
    case StateKind::Triplet2: return triplet;
    case StateKind::GHZ3: return ghz3;
    case StateKind::GHZ4: return ghz4;
    case StateKind::Cluster4: return cluster4;
  }
  throw std::logic_error("term_specs: bad kind");
}

inline Rational witness_constant(StateKind kind) {
  switch (kind) {
    case StateKind::Triplet2: return {1, 4};
    case StateKind::GHZ3: return {3, 8};
    case StateKind::GHZ4: return {7, 16};
    case StateKind::Cluster4: return {7, 16};
  }
  throw std::logic_error("witness_constant: bad kind");
}

}  // namespace detail

inline WitnessOperator witness_operator(StateKind kind) {
  WitnessOperator w;
  w.n_qubits = qubit_count(kind);
  w.constant = detail::witness_constant(kind);
  for (const auto& spec : detail::term_specs(kind))
    w.terms.push_back({{spec.coeff_num, w.constant.den}, PauliString::parse(spec.pauli)});
  return w;
}

// Same order as witness_operator's term list.
inline std::vector<MappingEntry> mapping_table(StateKind kind) {
  std::vector<MappingEntry> entries;
  for (const auto& spec : detail::term_specs(kind))
    entries.push_back({PauliString::parse(spec.pauli), spec.gates, spec.readout});
  return entries;
}

// theta = -Tr[W rho]; positive values certify entanglement.
inline double entanglement_parameter_exact(const DensityMatrix& rho, const WitnessOperator& w) {
  if (w.n_qubits != rho.n_qubits())
    throw std::invalid_argument("entanglement_parameter_exact: dimension mismatch");
  double tr = w.constant.value();
  for (const WitnessTerm& t : w.terms) tr += t.coeff.value() * expectation_pauli(rho, t.pauli);
  return -tr;
}

// |Tr[rho_j Z_readout] - Tr[rho term]| for one mapping entry.
inline double mapping_entry_error(const MappingEntry& entry, const DensityMatrix& rho) {
  DensityMatrix mapped = apply_circuit(rho, entry.unitary);
  PauliString z = PauliString::identity(rho.n_qubits());
  z.letters[static_cast<std::size_t>(entry.readout_qubit)] = Pauli::Z;
  return std::abs(expectation_pauli(mapped, z) - expectation_pauli(rho, entry.term));
}

// Conjugation oracle over random mixed states; throws naming the first
// entry that fails.
inline void verify_mapping_table(StateKind kind, int samples, double tol, std::mt19937_64& rng) {
  const int n = qubit_count(kind);
  for (const MappingEntry& entry : mapping_table(kind)) {
    for (int s = 0; s < samples; ++s) {
      DensityMatrix rho = random_density_matrix(n, rng);
      const double err = mapping_entry_error(entry, rho);
      if (err > tol)
        throw std::runtime_error(std::string("mapping oracle failed for term ") + entry.term.str() +
                                 " (" + to_string(kind) + "), error " + std::to_string(err));
    }
  }
}

struct SampledTheta {
  double estimate = 0.0;
  double stderr_est = 0.0;
};

// Shot-based theta: each term's expectation comes from conjugating a copy
// of rho and sampling its readout qubit, <P> = p0 - p1. The per-term
// binomial variances are propagated in quadrature. The variance uses the
// Agresti-Coull adjusted probability at the 3-sigma level (z = 3), which
// keeps coverage honest for near-extremal counts and cannot report a
// spuriously zero stderr.
inline SampledTheta entanglement_parameter_sampled(const DensityMatrix& rho, StateKind kind,
                                                   int shots, double readout_error,
                                                   std::mt19937_64& rng) {
  if (shots < 1) throw std::invalid_argument("entanglement_parameter_sampled: shots must be >= 1");
  const WitnessOperator w = witness_operator(kind);
  if (w.n_qubits != rho.n_qubits())
    throw std::invalid_argument("entanglement_parameter_sampled: dimension mismatch");
  const std::vector<MappingEntry> table = mapping_table(kind);
  double tr = w.constant.value();
  double var = 0.0;
  for (std::size_t i = 0; i < table.size(); ++i) {
    DensityMatrix mapped = apply_circuit(rho, table[i].unitary);
    MeasurementCounts counts =
        sample_qubit_z(mapped, table[i].readout_qubit, shots, readout_error, rng);
    const double coeff = w.terms[i].coeff.value();
    tr += coeff * counts.expectation_z();
    const double p_adj = (counts.count1 + 4.5) / (shots + 9.0);  // z^2/2, N + z^2 at z = 3
    var += coeff * coeff * 4.0 * p_adj * (1.0 - p_adj) / shots;
  }
  return {-tr, std::sqrt(var)};
}

// Plain-text audit dump: coefficient and Pauli letters, identity row first.
inline void write_witness_terms(std::ostream& os, const WitnessOperator& w) {
  os << w.constant.str() << ' ' << PauliString::identity(w.n_qubits).str() << '\n';
  for (const WitnessTerm& t : w.terms) os << t.coeff.str() << ' ' << t.pauli.str() << '\n';
}

}  // namespace urdd
