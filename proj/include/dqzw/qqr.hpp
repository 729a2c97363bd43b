// Quaternion QR factorization via Householder reflectors.
//
// The phase convention makes diag(R) real and nonnegative, which the dual
// QR stage relies on, and the whole computation is a deterministic function
// of the input entries.
#pragma once

#include <vector>

#include "dqzw/errors.hpp"
#include "dqzw/quaternion_matrix.hpp"

namespace dqzw {

struct QqrResult {
  QuaternionMatrix q;  // unitary, m x m
  QuaternionMatrix r;  // upper triangular, real nonnegative diagonal
};

inline QqrResult qqr(const QuaternionMatrix& a) {
  const int m = a.rows();
  const int n = a.cols();
  if (m < n) throw DimensionMismatch("qqr expects rows >= cols");

  QuaternionMatrix q = QuaternionMatrix::identity(m);
  QuaternionMatrix r = a;
  std::vector<Quaternion> v(m);

  for (int k = 0; k < n; ++k) {
    double col_norm_sq = 0.0;
    for (int i = k; i < m; ++i) col_norm_sq += r(i, k).norm_sq();
    const double col_norm = std::sqrt(col_norm_sq);
    if (col_norm == 0.0) continue;  // zero column: R(k,k) stays 0

    // Reflector v = x + omega * ||x|| * e1 with omega the unit phase of x1;
    // the choice avoids cancellation and keeps v^H v real.
    const Quaternion x1 = r(k, k);
    const double x1_norm = x1.norm();
    const Quaternion omega = x1_norm > 0.0 ? x1 / x1_norm : Quaternion(1.0);
    for (int i = k; i < m; ++i) v[i] = r(i, k);
    v[k] += omega * col_norm;
    const double vhv = 2.0 * col_norm * (col_norm + x1_norm);
    const double c = 2.0 / vhv;

    // R <- H R on rows k..m-1 (H = I - c v v^H).
    for (int j = k; j < n; ++j) {
      Quaternion dot;  // v^H R(:,j)
      for (int i = k; i < m; ++i) dot += v[i].conj() * r(i, j);
      dot = dot * c;
      for (int i = k; i < m; ++i) r(i, j) -= v[i] * dot;
    }
    // Q <- Q H.
    for (int i = 0; i < m; ++i) {
      Quaternion dot;  // Q(i,:) v
      for (int t = k; t < m; ++t) dot += q(i, t) * v[t];
      dot = dot * c;
      for (int t = k; t < m; ++t) q(i, t) -= dot * v[t].conj();
    }

    // After the reflection R(k,k) = -omega * ||x||; absorb the phase so the
    // diagonal becomes the real value ||x||.
    const Quaternion phi = -omega.conj();
    for (int j = k; j < n; ++j) r(k, j) = phi * r(k, j);
    const Quaternion phi_conj = phi.conj();
    for (int i = 0; i < m; ++i) q(i, k) = q(i, k) * phi_conj;
    r(k, k) = Quaternion(col_norm);  // exact by construction
    for (int i = k + 1; i < m; ++i) r(i, k) = Quaternion();  // eliminated entries
  }
  return {q, r};
}

}  // namespace dqzw
