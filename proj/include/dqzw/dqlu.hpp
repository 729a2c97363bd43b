// Dual quaternion LU factorization.
//
// Standard parts come from the quaternion LU of A_s.  The dual parts solve
// the Sylvester relation A_i = L_s U_i + L_i U_s through the triangular
// splitting of M = L_s^{-1} A_i U_s^{-1}:
//   L_i = L_s * strict_lower(M),   U_i = (diag(M) + strict_upper(M)) * U_s,
// which satisfies the relation exactly and keeps L_i strictly lower and
// U_i upper triangular.
#pragma once

#include "dqzw/dual_quaternion_matrix.hpp"
#include "dqzw/errors.hpp"
#include "dqzw/qlu.hpp"

namespace dqzw {

struct DqluFactors {
  DualQuaternionMatrix l;  // L_s unit lower, L_i strictly lower
  DualQuaternionMatrix u;  // both parts upper triangular
};

namespace detail {

// X with L X = B for unit lower triangular L (forward substitution).
inline QuaternionMatrix solve_unit_lower_left(const QuaternionMatrix& l,
                                              const QuaternionMatrix& b) {
  const int n = l.rows();
  QuaternionMatrix x(n, b.cols());
  for (int j = 0; j < b.cols(); ++j) {
    for (int r = 0; r < n; ++r) {
      Quaternion s = b(r, j);
      for (int t = 0; t < r; ++t) s -= l(r, t) * x(t, j);
      x(r, j) = s;
    }
  }
  return x;
}

// M with M U = X for upper triangular U (column sweep, right division).
inline QuaternionMatrix solve_upper_right(const QuaternionMatrix& x,
                                          const QuaternionMatrix& u) {
  const int n = u.rows();
  QuaternionMatrix m(x.rows(), n);
  for (int k = 0; k < n; ++k) {
    const Quaternion pivot_inv = qinv(u(k, k));
    for (int r = 0; r < x.rows(); ++r) {
      Quaternion s = x(r, k);
      for (int t = 0; t < k; ++t) s -= m(r, t) * u(t, k);
      m(r, k) = s * pivot_inv;
    }
  }
  return m;
}

}  // namespace detail

inline DqluFactors dqlu(const DualQuaternionMatrix& a, double pivot_tol = -1.0) {
  if (a.rows() != a.cols()) throw DimensionMismatch("dqlu expects a square matrix");
  const QluResult standard = qlu(a.s(), pivot_tol);

  const QuaternionMatrix x = detail::solve_unit_lower_left(standard.l, a.i());
  const QuaternionMatrix m = detail::solve_upper_right(x, standard.u);

  const int n = a.rows();
  QuaternionMatrix lower(n, n), upper(n, n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) (r > c ? lower : upper)(r, c) = m(r, c);

  DqluFactors out;
  out.l = DualQuaternionMatrix(standard.l, standard.l * lower);
  out.u = DualQuaternionMatrix(standard.u, upper * standard.u);
  return out;
}

}  // namespace dqzw
