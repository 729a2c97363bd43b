// Dual quaternion QR factorization.
//
// Standard parts come from the quaternion QR of A_s.  With B = Q_s^H A_i,
// the dual parts are Q_i = Q_s P and R_i = B - P R_s where P is the
// anti-Hermitian matrix fixed column by column from
//   sum_{t<=k} p_t r_{s,tk} = b_k - r_{i,*k};
// the diagonal right-hand term splits into a real part (the R_i diagonal)
// and a pure imaginary part (the P diagonal), and the strict upper part of
// P mirrors the lower as -conj.
#pragma once

#include "dqzw/dual_quaternion_matrix.hpp"
#include "dqzw/errors.hpp"
#include "dqzw/qqr.hpp"

namespace dqzw {

struct DqqrFactors {
  DualQuaternionMatrix q;  // unitary as a dual quaternion matrix
  DualQuaternionMatrix r;  // both parts upper triangular, real diagonals
  QuaternionMatrix p;      // anti-Hermitian, P = Q_s^H Q_i
  QuaternionMatrix b;      // Q_s^H A_i
};

inline DqqrFactors dqqr(const DualQuaternionMatrix& a, double rank_tol = -1.0) {
  if (a.rows() != a.cols()) throw DimensionMismatch("dqqr expects a square matrix");
  const int n = a.rows();
  const double tol = rank_tol < 0.0 ? 1e-12 * a.s().frobenius_norm() : rank_tol;

  const QqrResult standard = qqr(a.s());
  const QuaternionMatrix b = standard.q.conj_transpose() * a.i();

  QuaternionMatrix p(n, n);
  for (int k = 0; k < n; ++k) {
    const double r_skk = standard.r(k, k).w;  // real by the QQR phase convention
    if (r_skk <= tol) throw RankDeficient(k);
    for (int l = k; l < n; ++l) {
      Quaternion rhs = b(l, k);
      for (int t = 0; t < k; ++t) rhs -= p(l, t) * standard.r(t, k);
      // Diagonal split: the real part of rhs is r_{i,kk}, the pure
      // imaginary part fixes p_kk.
      p(l, k) = (l == k ? rhs.imag() : rhs) / r_skk;
    }
  }
  // Anti-Hermitian mirror: the strict upper part is -(strict lower)^H.
  for (int k = 0; k < n; ++k)
    for (int l = k + 1; l < n; ++l) p(k, l) = -p(l, k).conj();

  // R_i = B - P R_s; entries below the diagonal vanish analytically, so the
  // roundoff residue there is dropped to keep the factor triangular.  The
  // diagonal is kept as computed (its real split is checked by tests).
  const QuaternionMatrix prs = p * standard.r;
  QuaternionMatrix r_i(n, n);
  for (int row = 0; row < n; ++row)
    for (int col = row; col < n; ++col) r_i(row, col) = b(row, col) - prs(row, col);

  DqqrFactors out;
  out.q = DualQuaternionMatrix(standard.q, standard.q * p);
  out.r = DualQuaternionMatrix(standard.r, r_i);
  out.p = p;
  out.b = b;
  return out;
}

}  // namespace dqzw
