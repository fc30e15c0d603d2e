// Small dense complex linear algebra helpers shared across the library.
#pragma once

#include <Eigen/Dense>

#include <complex>
#include <random>
#include <stdexcept>

namespace urdd {

using cplx = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using Mat2 = Eigen::Matrix2cd;
using Vec = Eigen::VectorXcd;

inline Mat kron(const Mat& a, const Mat& b) {
  Mat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

// Largest entrywise magnitude, used for tolerance checks.
inline double max_abs(const Mat& m) { return m.cwiseAbs().maxCoeff(); }

inline bool is_unitary(const Mat& u, double tol) {
  if (u.rows() != u.cols()) return false;
  Mat d = u.adjoint() * u - Mat::Identity(u.rows(), u.cols());
  return max_abs(d) <= tol;
}

inline bool is_hermitian(const Mat& m, double tol) {
  return max_abs(Mat(m - m.adjoint())) <= tol;
}

// Haar-ish random unitary from the QR decomposition of a Ginibre matrix.
inline Mat random_unitary(int dim, std::mt19937_64& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  Mat a(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) a(i, j) = cplx(g(rng), g(rng));
  Eigen::HouseholderQR<Mat> qr(a);
  Mat q = qr.householderQ();
  Mat r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < dim; ++j) {
    cplx d = r(j, j);
    q.col(j) *= (std::abs(d) > 0) ? d / std::abs(d) : cplx(1, 0);
  }
  return q;
}

}  // namespace urdd
