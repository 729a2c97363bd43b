// Quaternion SVD computed through the complex adjoint representation.
//
// chi(A) carries each singular value of A twice; the left/right singular
// spaces of chi(A) are closed under the quaternion structure map
// psi([a; b]) = [-conj(b); conj(a)].  One quaternion column is extracted
// per pair by a modified Gram-Schmidt sweep over the complex singular
// vectors, which also copes with clustered and zero singular values.  A
// fixed phase convention (largest-magnitude component of each left vector
// made real positive) keeps repeated runs bit-identical.
#pragma once

#include <Eigen/Dense>
#include <Eigen/SVD>
#include <algorithm>
#include <vector>

#include "dqzw/errors.hpp"
#include "dqzw/quaternion_matrix.hpp"

namespace dqzw {

struct QsvdResult {
  QuaternionMatrix u;         // m x m unitary
  QuaternionMatrix v;         // n x n unitary
  std::vector<double> sigma;  // min(m,n) values, nonincreasing, >= 0
};

namespace detail {

// Column j of a 2m-row complex matrix read back as a quaternion m-vector,
// inverting the adjoint column layout [u_alpha; -conj(u_beta)].
inline std::vector<Quaternion> quaternion_column(const Eigen::MatrixXcd& cols, int j) {
  const int m = static_cast<int>(cols.rows()) / 2;
  std::vector<Quaternion> u(static_cast<std::size_t>(m));
  for (int t = 0; t < m; ++t)
    u[static_cast<std::size_t>(t)] =
        from_complex_pair(cols(t, j), -std::conj(cols(m + t, j)));
  return u;
}

inline Quaternion column_dot(const QuaternionMatrix& basis, int col,
                             const std::vector<Quaternion>& v) {
  Quaternion s;
  for (int t = 0; t < basis.rows(); ++t) s += basis(t, col).conj() * v[static_cast<std::size_t>(t)];
  return s;
}

struct StructuredBasis {
  QuaternionMatrix basis;   // m x m with orthonormal quaternion columns
  std::vector<int> source;  // complex column index feeding each basis column
};

// Builds m orthonormal quaternion columns from the 2m complex columns of a
// unitary matrix with quaternionic symmetry.  Candidates whose residual
// after projection stays below `accept_tol` duplicate an already-extracted
// pair and are skipped.
inline StructuredBasis extract_structured_basis(const Eigen::MatrixXcd& cols,
                                                double accept_tol = 1e-3) {
  const int m = static_cast<int>(cols.rows()) / 2;
  StructuredBasis out;
  out.basis = QuaternionMatrix(m, m);
  out.source.assign(static_cast<std::size_t>(m), -1);

  int accepted = 0;
  auto try_accept = [&](std::vector<Quaternion> cand, int source_col) {
    for (int a = 0; a < accepted; ++a) {
      const Quaternion coef = column_dot(out.basis, a, cand);
      for (int t = 0; t < m; ++t)
        cand[static_cast<std::size_t>(t)] -= out.basis(t, a) * coef;
    }
    double nrm_sq = 0.0;
    for (const Quaternion& q : cand) nrm_sq += q.norm_sq();
    const double nrm = std::sqrt(nrm_sq);
    if (nrm <= accept_tol) return false;
    for (int t = 0; t < m; ++t)
      out.basis(t, accepted) = cand[static_cast<std::size_t>(t)] / nrm;
    out.source[static_cast<std::size_t>(accepted)] = source_col;
    ++accepted;
    return true;
  };

  for (int j = 0; j < cols.cols() && accepted < m; ++j)
    try_accept(quaternion_column(cols, j), j);

  // Deterministic completion; unreachable unless the complex SVD degraded.
  for (int t = 0; t < m && accepted < m; ++t) {
    std::vector<Quaternion> e(static_cast<std::size_t>(m));
    e[static_cast<std::size_t>(t)] = Quaternion(1.0);
    try_accept(std::move(e), -1);
  }
  if (accepted < m)
    throw ConvergenceFailure("quaternion singular-vector extraction failed");
  return out;
}

// Right-multiplies column `col` by the unit quaternion that turns the
// largest-magnitude entry of the reference column real positive.
inline Quaternion column_phase(const QuaternionMatrix& ref, int col) {
  int best = 0;
  double best_norm = -1.0;
  for (int t = 0; t < ref.rows(); ++t) {
    const double nrm = ref(t, col).norm_sq();
    if (nrm > best_norm) {
      best_norm = nrm;
      best = t;
    }
  }
  const Quaternion pivot = ref(best, col);
  const double nrm = pivot.norm();
  if (nrm == 0.0) return Quaternion(1.0);
  return pivot.conj() / nrm;
}

inline void apply_column_phase(QuaternionMatrix& mat, int col, const Quaternion& phi) {
  for (int t = 0; t < mat.rows(); ++t) mat(t, col) = mat(t, col) * phi;
}

}  // namespace detail

inline QsvdResult qsvd(const QuaternionMatrix& a) {
  const int m = a.rows();
  const int n = a.cols();
  if (m == 0 || n == 0) {
    return {QuaternionMatrix::identity(m), QuaternionMatrix::identity(n), {}};
  }

  const Eigen::MatrixXcd chi = complex_adjoint(a);
  Eigen::BDCSVD<Eigen::MatrixXcd> svd(chi, Eigen::ComputeFullU | Eigen::ComputeFullV);
  if (svd.info() != Eigen::Success)
    throw ConvergenceFailure("complex SVD of the adjoint did not converge");
  const Eigen::VectorXd& s = svd.singularValues();

  detail::StructuredBasis left = detail::extract_structured_basis(svd.matrixU());
  detail::StructuredBasis right = detail::extract_structured_basis(svd.matrixV());

  const int r = std::min(m, n);
  QsvdResult out;
  out.u = std::move(left.basis);
  out.v = std::move(right.basis);
  out.sigma.resize(static_cast<std::size_t>(r));
  const std::vector<int>& paired = m <= n ? left.source : right.source;
  for (int t = 0; t < r; ++t) {
    const int j = paired[static_cast<std::size_t>(t)];
    if (j < 0)
      throw ConvergenceFailure("singular value pairing lost during extraction");
    out.sigma[static_cast<std::size_t>(t)] = j < s.size() ? s(j) : 0.0;
  }

  // Shared phase for paired columns keeps U Sigma V^H invariant; surplus
  // columns (null spaces) are phase-fixed on their own.
  for (int t = 0; t < r; ++t) {
    const Quaternion phi = detail::column_phase(out.u, t);
    detail::apply_column_phase(out.u, t, phi);
    detail::apply_column_phase(out.v, t, phi);
  }
  for (int t = r; t < m; ++t)
    detail::apply_column_phase(out.u, t, detail::column_phase(out.u, t));
  for (int t = r; t < n; ++t)
    detail::apply_column_phase(out.v, t, detail::column_phase(out.v, t));
  return out;
}

}  // namespace dqzw
