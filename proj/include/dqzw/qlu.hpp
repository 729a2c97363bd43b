// Quaternion LU factorization (Doolittle, no pivoting).
//
// Pivoting is deliberately absent: the factorization must be a deterministic
// function of the input so that the verification stage reproduces the exact
// factors of an untouched carrier.
#pragma once

#include "dqzw/errors.hpp"
#include "dqzw/quaternion_matrix.hpp"

namespace dqzw {

struct QluResult {
  QuaternionMatrix l;  // unit lower triangular
  QuaternionMatrix u;  // upper triangular
};

inline double default_pivot_tol(const QuaternionMatrix& a) {
  return 1e-12 * a.frobenius_norm();
}

// A = LU with L unit lower and U upper triangular.  Throws SingularMinor(t)
// (1-based) when the pivot produced by eliminating leading minor t falls at
// or below `pivot_tol`; pass a negative tolerance for the 1e-12 * ||A||_F
// default.
inline QluResult qlu(const QuaternionMatrix& a, double pivot_tol = -1.0) {
  if (a.rows() != a.cols()) throw DimensionMismatch("qlu expects a square matrix");
  const int n = a.rows();
  const double tol = pivot_tol < 0.0 ? default_pivot_tol(a) : pivot_tol;

  QuaternionMatrix l = QuaternionMatrix::identity(n);
  QuaternionMatrix u(n, n);

  for (int k = 0; k < n; ++k) {
    for (int j = k; j < n; ++j) {
      Quaternion s = a(k, j);
      for (int t = 0; t < k; ++t) s -= l(k, t) * u(t, j);
      u(k, j) = s;
    }
    const Quaternion pivot = u(k, k);
    if (pivot.norm() <= tol) throw SingularMinor(k + 1);
    const Quaternion pivot_inv = qinv(pivot);
    for (int i = k + 1; i < n; ++i) {
      Quaternion s = a(i, k);
      for (int t = 0; t < k; ++t) s -= l(i, t) * u(t, k);
      l(i, k) = s * pivot_inv;  // right division: L(i,k) * U(k,k) = s
    }
  }
  return {l, u};
}

}  // namespace dqzw
