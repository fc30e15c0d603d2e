// Multi-qubit Pauli strings. Qubit 0 is the leftmost tensor factor
// (most significant bit of a basis index).
#pragma once

#include "urdd/linalg.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace urdd {

enum class Pauli : std::uint8_t { I, X, Y, Z };

inline char pauli_char(Pauli p) {
  switch (p) {
    case Pauli::I: return 'I';
    case Pauli::X: return 'X';
    case Pauli::Y: return 'Y';
    case Pauli::Z: return 'Z';
  }
  return '?';
}

inline Mat2 pauli_matrix(Pauli p) {
  Mat2 m;
  switch (p) {
    case Pauli::I: m << 1, 0, 0, 1; break;
    case Pauli::X: m << 0, 1, 1, 0; break;
    case Pauli::Y: m << 0, cplx(0, -1), cplx(0, 1), 0; break;
    case Pauli::Z: m << 1, 0, 0, -1; break;
  }
  return m;
}

struct PauliString {
  std::vector<Pauli> letters;  // one per qubit, index 0 = leftmost factor

  PauliString() = default;
  explicit PauliString(std::vector<Pauli> ls) : letters(std::move(ls)) {}

  static PauliString identity(int n_qubits) {
    return PauliString(std::vector<Pauli>(static_cast<std::size_t>(n_qubits), Pauli::I));
  }

  static PauliString parse(std::string_view s) {
    std::vector<Pauli> ls;
    ls.reserve(s.size());
    for (char c : s) {
      switch (c) {
        case 'I': ls.push_back(Pauli::I); break;
        case 'X': ls.push_back(Pauli::X); break;
        case 'Y': ls.push_back(Pauli::Y); break;
        case 'Z': ls.push_back(Pauli::Z); break;
        default: throw std::invalid_argument("PauliString::parse: bad letter");
      }
    }
    return PauliString(std::move(ls));
  }

  int n_qubits() const { return static_cast<int>(letters.size()); }

  bool is_identity() const {
    for (Pauli p : letters)
      if (p != Pauli::I) return false;
    return true;
  }

  std::string str() const {
    std::string s;
    s.reserve(letters.size());
    for (Pauli p : letters) s.push_back(pauli_char(p));
    return s;
  }

  // Full 2^n x 2^n matrix; fine for n <= 4.
  Mat matrix() const {
    Mat m = Mat::Identity(1, 1);
    for (Pauli p : letters) m = kron(m, pauli_matrix(p));
    return m;
  }

  bool operator==(const PauliString& other) const { return letters == other.letters; }
};

}  // namespace urdd
