// Dual quaternion singular value decomposition.
//
// Standard parts come from the quaternion SVD of A_s.  Writing
// U = U_s(I + P_U eps) and V = V_s(I + P_V eps) with P_U, P_V
// anti-Hermitian, the first-order expansion of A = U Sigma V^H gives
//   C := U_s^H A_i V_s = P_U Sigma_s + Sigma_i - Sigma_s P_V,
// which is solved entrywise.  Off-diagonal pairs need separated singular
// values; the diagonal gauge fixes p_{V,kk} = 0.  When A_s is rank
// deficient, the trailing singular directions carry A_i through the block
// G = U2^H A_i V2: its quaternion SVD W_u D W_v^H rotates the trailing
// columns, the D_ii become infinitesimal singular values, and W_u, W_v are
// the keys needed to reproduce the rotation at verification time.
#pragma once

#include <vector>

#include "dqzw/dual_number.hpp"
#include "dqzw/dual_quaternion_matrix.hpp"
#include "dqzw/errors.hpp"
#include "dqzw/qsvd.hpp"

namespace dqzw {

struct DqsvdFactors {
  DualQuaternionMatrix u;         // unitary
  DualQuaternionMatrix v;         // unitary
  std::vector<DualNumber> sigma;  // nonincreasing under the dual total order
  QuaternionMatrix w_u;           // key rotating trailing U columns; empty when full rank
  QuaternionMatrix w_v;           // key rotating trailing V columns; empty when full rank
  int rank = 0;                   // appreciable singular values

  bool full_rank() const { return w_u.rows() == 0; }
};

struct DqsvdOptions {
  double tol_rank = 1e-10;  // sigma > tol_rank * sigma_max counts as appreciable
  double tol_gap = 1e-8;    // appreciable sigmas closer than tol_gap * sigma_max degenerate
};

namespace detail {

inline QuaternionMatrix submatrix_cols(const QuaternionMatrix& a, int first, int count) {
  QuaternionMatrix out(a.rows(), count);
  for (int r = 0; r < a.rows(); ++r)
    for (int c = 0; c < count; ++c) out(r, c) = a(r, first + c);
  return out;
}

inline void assign_cols(QuaternionMatrix& a, int first, const QuaternionMatrix& block) {
  for (int r = 0; r < a.rows(); ++r)
    for (int c = 0; c < block.cols(); ++c) a(r, first + c) = block(r, c);
}

}  // namespace detail

inline DqsvdFactors dqsvd(const DualQuaternionMatrix& a, const DqsvdOptions& opts = {}) {
  if (a.rows() != a.cols()) throw DimensionMismatch("dqsvd expects a square matrix");
  const int n = a.rows();

  QsvdResult standard = qsvd(a.s());
  const double sigma_max = n > 0 ? standard.sigma[0] : 0.0;

  int rank = 0;
  while (rank < n && standard.sigma[static_cast<std::size_t>(rank)] > opts.tol_rank * sigma_max)
    ++rank;
  for (int k = 0; k + 1 < rank; ++k) {
    const double gap = standard.sigma[static_cast<std::size_t>(k)] -
                       standard.sigma[static_cast<std::size_t>(k + 1)];
    if (gap <= opts.tol_gap * sigma_max)
      throw DegenerateSpectrum("appreciable singular values coincide within tolerance");
  }

  DqsvdFactors out;
  out.rank = rank;
  QuaternionMatrix u_s = standard.u;
  QuaternionMatrix v_s = standard.v;
  std::vector<double> sigma_s(standard.sigma);
  std::vector<double> sigma_i(static_cast<std::size_t>(n), 0.0);

  if (rank < n) {
    // Lemma-style rank-deficient branch: diagonalize the trailing block of
    // A_i and absorb the rotations into the trailing columns.
    const int t = n - rank;
    const QuaternionMatrix u2 = detail::submatrix_cols(u_s, rank, t);
    const QuaternionMatrix v2 = detail::submatrix_cols(v_s, rank, t);
    const QuaternionMatrix g = u2.conj_transpose() * a.i() * v2;
    QsvdResult gsvd = qsvd(g);
    detail::assign_cols(u_s, rank, u2 * gsvd.u);
    detail::assign_cols(v_s, rank, v2 * gsvd.v);
    for (int k = rank; k < n; ++k) {
      sigma_s[static_cast<std::size_t>(k)] = 0.0;  // infinitesimal from here on
      sigma_i[static_cast<std::size_t>(k)] = gsvd.sigma[static_cast<std::size_t>(k - rank)];
    }
    out.w_u = std::move(gsvd.u);
    out.w_v = std::move(gsvd.v);
  }

  const QuaternionMatrix c = u_s.conj_transpose() * a.i() * v_s;
  QuaternionMatrix p_u(n, n), p_v(n, n);
  for (int k = 0; k < rank; ++k) {
    sigma_i[static_cast<std::size_t>(k)] = c(k, k).w;
    p_u(k, k) = c(k, k).imag() / sigma_s[static_cast<std::size_t>(k)];
    // gauge: p_v(k,k) = 0
    for (int l = k + 1; l < n; ++l) {
      const double sk = sigma_s[static_cast<std::size_t>(k)];
      const double sl = sigma_s[static_cast<std::size_t>(l)];
      if (l < rank) {
        const double denom = sl * sl - sk * sk;
        p_u(k, l) = (c(k, l) * sl + c(l, k).conj() * sk) / denom;
        p_v(k, l) = (c(k, l) * sk + c(l, k).conj() * sl) / denom;
      } else {
        // sigma_l is infinitesimal: the pair decouples.
        p_v(k, l) = -c(k, l) / sk;
        p_u(l, k) = c(l, k) / sk;
        p_u(k, l) = -p_u(l, k).conj();
      }
      p_u(l, k) = -p_u(k, l).conj();
      p_v(l, k) = -p_v(k, l).conj();
    }
  }

  out.u = DualQuaternionMatrix(u_s, u_s * p_u);
  out.v = DualQuaternionMatrix(v_s, v_s * p_v);
  out.sigma.resize(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k)
    out.sigma[static_cast<std::size_t>(k)] = {sigma_s[static_cast<std::size_t>(k)],
                                              sigma_i[static_cast<std::size_t>(k)]};
  return out;
}

// A_i reconstructed from the factor identity
// A_i = U_s Sigma_s V_i^H + U_s Sigma_i V_s^H + U_i Sigma_s V_s^H,
// the recovery equation used at verification time.
inline QuaternionMatrix dqsvd_dual_reconstruction(const QuaternionMatrix& u_s,
                                                  const QuaternionMatrix& u_i,
                                                  const std::vector<double>& sigma_s,
                                                  const std::vector<double>& sigma_i,
                                                  const QuaternionMatrix& v_s,
                                                  const QuaternionMatrix& v_i) {
  auto scale_cols = [](const QuaternionMatrix& m, const std::vector<double>& d) {
    QuaternionMatrix out(m.rows(), m.cols());
    for (int r = 0; r < m.rows(); ++r)
      for (int c = 0; c < m.cols(); ++c) out(r, c) = m(r, c) * d[static_cast<std::size_t>(c)];
    return out;
  };
  return scale_cols(u_s, sigma_s) * v_i.conj_transpose() +
         scale_cols(u_s, sigma_i) * v_s.conj_transpose() +
         scale_cols(u_i, sigma_s) * v_s.conj_transpose();
}

}  // namespace dqzw
