// Single-qubit Kraus channels (completely positive trace-preserving maps).
#pragma once

#include "urdd/linalg.hpp"

#include <vector>

namespace urdd {

struct KrausChannel {
  std::vector<Mat2> kraus_ops;

  static KrausChannel identity() {
    KrausChannel ch;
    ch.kraus_ops.push_back(Mat2::Identity());
    return ch;
  }

  // Completeness: sum K^dag K = I.
  bool is_complete(double tol = 1e-10) const {
    Mat2 s = Mat2::Zero();
    for (const Mat2& k : kraus_ops) s += k.adjoint() * k;
    return max_abs(Mat(s - Mat2::Identity())) <= tol;
  }

  // Action on a bare 2x2 matrix (used for channel-level tests).
  Mat2 apply(const Mat2& rho) const {
    Mat2 out = Mat2::Zero();
    for (const Mat2& k : kraus_ops) out += k * rho * k.adjoint();
    return out;
  }
};

// second after first; Kraus set is the pairwise product (zero operators dropped).
inline KrausChannel compose(const KrausChannel& first, const KrausChannel& second) {
  KrausChannel out;
  out.kraus_ops.reserve(first.kraus_ops.size() * second.kraus_ops.size());
  for (const Mat2& a : second.kraus_ops)
    for (const Mat2& b : first.kraus_ops) {
      Mat2 k = a * b;
      if (max_abs(Mat(k)) > 0.0) out.kraus_ops.push_back(k);
    }
  return out;
}

}  // namespace urdd
