// Dense density-matrix simulation for 1-4 qubits: unitary conjugation,
// Kraus channels, Pauli expectations and single-qubit z sampling.
//
// Convention: qubit 0 is the leftmost tensor factor, i.e. the most
// significant bit of a computational-basis index.
#pragma once

#include "urdd/kraus.hpp"
#include "urdd/linalg.hpp"
#include "urdd/pauli.hpp"

#include <random>
#include <span>
#include <stdexcept>
#include <vector>

namespace urdd {

inline constexpr int kMaxQubits = 4;

struct MeasurementCounts {
  int shots = 0;
  int count0 = 0;
  int count1 = 0;

  double p0() const { return static_cast<double>(count0) / shots; }
  double p1() const { return static_cast<double>(count1) / shots; }
  // <sigma_z> estimator, p0 - p1.
  double expectation_z() const { return (count0 - count1) / static_cast<double>(shots); }
};

class DensityMatrix {
 public:
  // |0...0><0...0| on n qubits.
  explicit DensityMatrix(int n_qubits) : n_(check_n(n_qubits)), data_(Mat::Zero(1 << n_, 1 << n_)) {
    data_(0, 0) = 1.0;
  }

  static DensityMatrix from_pure(int n_qubits, const Vec& amplitudes) {
    check_n(n_qubits);
    if (amplitudes.size() != (1 << n_qubits))
      throw std::invalid_argument("from_pure: amplitude vector has wrong dimension");
    double norm = amplitudes.squaredNorm();
    if (std::abs(norm - 1.0) > 1e-9) throw std::invalid_argument("from_pure: state not normalized");
    DensityMatrix rho(n_qubits);
    rho.data_ = amplitudes * amplitudes.adjoint();
    return rho;
  }

  static DensityMatrix from_matrix(int n_qubits, Mat m) {
    check_n(n_qubits);
    if (m.rows() != (1 << n_qubits) || m.cols() != (1 << n_qubits))
      throw std::invalid_argument("from_matrix: wrong dimension");
    DensityMatrix rho(n_qubits);
    rho.data_ = std::move(m);
    rho.validate();
    return rho;
  }

  int n_qubits() const { return n_; }
  int dim() const { return 1 << n_; }
  const Mat& data() const { return data_; }
  Mat& mutable_data() { return data_; }

  double trace_real() const { return data_.trace().real(); }

  double purity() const { return (data_ * data_).trace().real(); }

  // Trace 1 and Hermitian within 1e-10, eigenvalues >= -1e-9.
  void validate(double tol = 1e-10, double eig_floor = -1e-9) const {
    if (std::abs(data_.trace() - cplx(1.0, 0.0)) > tol)
      throw std::runtime_error("DensityMatrix: trace != 1");
    if (!is_hermitian(data_, tol)) throw std::runtime_error("DensityMatrix: not Hermitian");
    Eigen::SelfAdjointEigenSolver<Mat> es(data_, Eigen::EigenvaluesOnly);
    if (es.eigenvalues().minCoeff() < eig_floor)
      throw std::runtime_error("DensityMatrix: negative eigenvalue");
  }

 private:
  static int check_n(int n) {
    if (n < 1 || n > kMaxQubits) throw std::invalid_argument("DensityMatrix: n_qubits must be 1..4");
    return n;
  }

  int n_;
  Mat data_;
};

namespace detail {

// In-place rho -> U rho U^dag for a 2x2 unitary on one qubit.
inline void conjugate_1q(Mat& rho, int n_qubits, int qubit, const Mat2& u) {
  const int dim = 1 << n_qubits;
  const int mask = 1 << (n_qubits - 1 - qubit);
  const cplx u00 = u(0, 0), u01 = u(0, 1), u10 = u(1, 0), u11 = u(1, 1);
  for (int i0 = 0; i0 < dim; ++i0) {
    if (i0 & mask) continue;
    const int i1 = i0 | mask;
    for (int j = 0; j < dim; ++j) {
      const cplx a = rho(i0, j), b = rho(i1, j);
      rho(i0, j) = u00 * a + u01 * b;
      rho(i1, j) = u10 * a + u11 * b;
    }
  }
  const cplx c00 = std::conj(u00), c01 = std::conj(u01), c10 = std::conj(u10), c11 = std::conj(u11);
  for (int j0 = 0; j0 < dim; ++j0) {
    if (j0 & mask) continue;
    const int j1 = j0 | mask;
    for (int i = 0; i < dim; ++i) {
      const cplx a = rho(i, j0), b = rho(i, j1);
      rho(i, j0) = a * c00 + b * c01;
      rho(i, j1) = a * c10 + b * c11;
    }
  }
}

}  // namespace detail

// Embed a 2^k x 2^k unitary acting on the ordered qubits `targets`
// (targets[0] supplies the most significant sub-index bit) into the
// full 2^n x 2^n space, identity elsewhere.
inline Mat embed_unitary(int n_qubits, const Mat& u, std::span<const int> targets) {
  const int k = static_cast<int>(targets.size());
  const int dim = 1 << n_qubits;
  if (u.rows() != (1 << k) || u.cols() != (1 << k))
    throw std::invalid_argument("embed_unitary: dimension of U must be 2^|targets|");
  for (std::size_t a = 0; a < targets.size(); ++a) {
    if (targets[a] < 0 || targets[a] >= n_qubits)
      throw std::invalid_argument("embed_unitary: target index out of range");
    for (std::size_t b = a + 1; b < targets.size(); ++b)
      if (targets[a] == targets[b]) throw std::invalid_argument("embed_unitary: duplicate targets");
  }
  auto sub_index = [&](int i) {
    int s = 0;
    for (int a = 0; a < k; ++a) s = (s << 1) | ((i >> (n_qubits - 1 - targets[a])) & 1);
    return s;
  };
  int rest_mask = dim - 1;
  for (int t : targets) rest_mask &= ~(1 << (n_qubits - 1 - t));
  Mat full = Mat::Zero(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j)
      if ((i & rest_mask) == (j & rest_mask)) full(i, j) = u(sub_index(i), sub_index(j));
  return full;
}

// U rho U^dag with U embedded by identity on non-targets.
inline DensityMatrix apply_unitary(const DensityMatrix& rho, const Mat& u,
                                   std::span<const int> targets) {
  if (!is_unitary(u, 1e-10)) throw std::invalid_argument("apply_unitary: U is not unitary");
  if (targets.empty()) throw std::invalid_argument("apply_unitary: no targets");
  for (std::size_t a = 0; a < targets.size(); ++a) {
    if (targets[a] < 0 || targets[a] >= rho.n_qubits())
      throw std::invalid_argument("apply_unitary: target index out of range");
    for (std::size_t b = a + 1; b < targets.size(); ++b)
      if (targets[a] == targets[b]) throw std::invalid_argument("apply_unitary: duplicate targets");
  }
  if (u.rows() != (1 << targets.size()) || u.cols() != (1 << targets.size()))
    throw std::invalid_argument("apply_unitary: dimension of U must be 2^|targets|");
  DensityMatrix out = rho;
  if (targets.size() == 1) {
    detail::conjugate_1q(out.mutable_data(), rho.n_qubits(), targets[0], Mat2(u));
    return out;
  }
  Mat full = embed_unitary(rho.n_qubits(), u, targets);
  out.mutable_data() = full * rho.data() * full.adjoint();
  return out;
}

inline DensityMatrix apply_unitary(const DensityMatrix& rho, const Mat& u,
                                   std::initializer_list<int> targets) {
  return apply_unitary(rho, u, std::span<const int>(targets.begin(), targets.size()));
}

// Tr[rho P]; the trace of a Hermitian product is real, anything beyond
// 1e-10 of imaginary part means the inputs are broken.
inline double expectation_pauli(const DensityMatrix& rho, const PauliString& p) {
  if (p.n_qubits() != rho.n_qubits())
    throw std::invalid_argument("expectation_pauli: dimension mismatch");
  const int n = rho.n_qubits();
  const int dim = rho.dim();
  cplx tr = 0.0;
  for (int i = 0; i < dim; ++i) {
    // P|i> = c |perm>; Tr[rho P] = sum_i c_i rho(i, perm(i))
    int perm = i;
    cplx c = 1.0;
    for (int q = 0; q < n; ++q) {
      const int bitpos = n - 1 - q;
      const int b = (i >> bitpos) & 1;
      switch (p.letters[static_cast<std::size_t>(q)]) {
        case Pauli::I: break;
        case Pauli::X: perm ^= 1 << bitpos; break;
        case Pauli::Y:
          perm ^= 1 << bitpos;
          c *= b ? cplx(0, -1) : cplx(0, 1);
          break;
        case Pauli::Z:
          if (b) c = -c;
          break;
      }
    }
    tr += c * rho.data()(i, perm);
  }
  if (std::abs(tr.imag()) > 1e-10)
    throw std::runtime_error("expectation_pauli: non-real expectation value");
  return tr.real();
}

// sum_k K rho K^dag on one qubit.
inline DensityMatrix apply_kraus_channel(const DensityMatrix& rho, const KrausChannel& ch,
                                         int target) {
  if (target < 0 || target >= rho.n_qubits())
    throw std::invalid_argument("apply_kraus_channel: target out of range");
  if (!ch.is_complete(1e-10)) throw std::invalid_argument("apply_kraus_channel: incomplete Kraus set");
  const int n = rho.n_qubits();
  const int dim = rho.dim();
  const int mask = 1 << (n - 1 - target);
  DensityMatrix out = rho;
  Mat& acc = out.mutable_data();
  acc.setZero();
  for (const Mat2& k : ch.kraus_ops) {
    const cplx k00 = k(0, 0), k01 = k(0, 1), k10 = k(1, 0), k11 = k(1, 1);
    const cplx c00 = std::conj(k00), c01 = std::conj(k01), c10 = std::conj(k10),
               c11 = std::conj(k11);
    for (int i0 = 0; i0 < dim; ++i0) {
      if (i0 & mask) continue;
      const int i1 = i0 | mask;
      for (int j0 = 0; j0 < dim; ++j0) {
        if (j0 & mask) continue;
        const int j1 = j0 | mask;
        const cplx r00 = rho.data()(i0, j0), r01 = rho.data()(i0, j1);
        const cplx r10 = rho.data()(i1, j0), r11 = rho.data()(i1, j1);
        // (K rho K^dag) on the 2x2 block of this qubit
        const cplx t00 = k00 * r00 + k01 * r10, t01 = k00 * r01 + k01 * r11;
        const cplx t10 = k10 * r00 + k11 * r10, t11 = k10 * r01 + k11 * r11;
        acc(i0, j0) += t00 * c00 + t01 * c01;
        acc(i0, j1) += t00 * c10 + t01 * c11;
        acc(i1, j0) += t10 * c00 + t11 * c01;
        acc(i1, j1) += t10 * c10 + t11 * c11;
      }
    }
  }
  return out;
}

// P(bit q = 1) = Tr[rho Pi_1^(q)].
inline double probability_one(const DensityMatrix& rho, int qubit) {
  if (qubit < 0 || qubit >= rho.n_qubits())
    throw std::invalid_argument("probability_one: qubit out of range");
  const int mask = 1 << (rho.n_qubits() - 1 - qubit);
  double p1 = 0.0;
  for (int i = 0; i < rho.dim(); ++i)
    if (i & mask) p1 += rho.data()(i, i).real();
  return std::min(1.0, std::max(0.0, p1));
}

// Counted binomial draw of the qubit's z statistics; each classical outcome
// is independently flipped with probability readout_error.
inline MeasurementCounts sample_qubit_z(const DensityMatrix& rho, int qubit, int shots,
                                        double readout_error, std::mt19937_64& rng) {
  if (shots < 1) throw std::invalid_argument("sample_qubit_z: shots must be >= 1");
  if (readout_error < 0.0 || readout_error > 0.5)
    throw std::invalid_argument("sample_qubit_z: readout_error must be in [0, 0.5]");
  const double p1 = probability_one(rho, qubit);
  const double p1_eff = p1 * (1.0 - readout_error) + (1.0 - p1) * readout_error;
  std::binomial_distribution<int> binom(shots, p1_eff);
  MeasurementCounts counts;
  counts.shots = shots;
  counts.count1 = binom(rng);
  counts.count0 = shots - counts.count1;
  return counts;
}

// Full-rank random state (Ginibre G G^dag, normalized); used by the
// mapping-table oracle and property tests.
inline DensityMatrix random_density_matrix(int n_qubits, std::mt19937_64& rng) {
  const int dim = 1 << n_qubits;
  std::normal_distribution<double> g(0.0, 1.0);
  Mat a(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) a(i, j) = cplx(g(rng), g(rng));
  Mat m = a * a.adjoint();
  m /= m.trace().real();
  DensityMatrix rho(n_qubits);
  rho.mutable_data() = m;
  return rho;
}

}  // namespace urdd
