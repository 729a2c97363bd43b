// Dense row-major quaternion matrices, the complex adjoint representation,
// and the q-determinant.
#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <vector>

#include "dqzw/errors.hpp"
#include "dqzw/quaternion.hpp"

namespace dqzw {

class QuaternionMatrix {
 public:
  QuaternionMatrix() = default;
  QuaternionMatrix(int rows, int cols)
      : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols) {
    if (rows < 0 || cols < 0) throw DimensionMismatch("negative matrix dimension");
  }

  static QuaternionMatrix identity(int n) {
    QuaternionMatrix m(n, n);
    for (int t = 0; t < n; ++t) m(t, t) = Quaternion(1.0);
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool empty() const { return data_.empty(); }

  Quaternion& operator()(int r, int c) { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
  const Quaternion& operator()(int r, int c) const {
    return data_[static_cast<std::size_t>(r) * cols_ + c];
  }

  const std::vector<Quaternion>& data() const { return data_; }
  std::vector<Quaternion>& data() { return data_; }

  bool same_shape(const QuaternionMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_;
  }

  bool operator==(const QuaternionMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }

  QuaternionMatrix operator+(const QuaternionMatrix& o) const {
    require_same_shape(o);
    QuaternionMatrix r(rows_, cols_);
    for (std::size_t t = 0; t < data_.size(); ++t) r.data_[t] = data_[t] + o.data_[t];
    return r;
  }

  QuaternionMatrix operator-(const QuaternionMatrix& o) const {
    require_same_shape(o);
    QuaternionMatrix r(rows_, cols_);
    for (std::size_t t = 0; t < data_.size(); ++t) r.data_[t] = data_[t] - o.data_[t];
    return r;
  }

  QuaternionMatrix operator-() const {
    QuaternionMatrix r(rows_, cols_);
    for (std::size_t t = 0; t < data_.size(); ++t) r.data_[t] = -data_[t];
    return r;
  }

  // Matrix product over the noncommutative quaternion ring; factor order
  // is preserved entrywise.
  QuaternionMatrix operator*(const QuaternionMatrix& o) const {
    if (cols_ != o.rows_) throw DimensionMismatch("quaternion matrix product shapes");
    QuaternionMatrix r(rows_, o.cols_);
    for (int u = 0; u < rows_; ++u) {
      for (int t = 0; t < cols_; ++t) {
        const Quaternion& a = (*this)(u, t);
        if (a.is_zero()) continue;
        for (int v = 0; v < o.cols_; ++v) r(u, v) += a * o(t, v);
      }
    }
    return r;
  }

  QuaternionMatrix operator*(double s) const {
    QuaternionMatrix r(rows_, cols_);
    for (std::size_t t = 0; t < data_.size(); ++t) r.data_[t] = data_[t] * s;
    return r;
  }

  QuaternionMatrix conj_transpose() const {
    QuaternionMatrix r(cols_, rows_);
    for (int u = 0; u < rows_; ++u)
      for (int v = 0; v < cols_; ++v) r(v, u) = (*this)(u, v).conj();
    return r;
  }

  double frobenius_norm_sq() const {
    double s = 0.0;
    for (const Quaternion& q : data_) s += q.norm_sq();
    return s;
  }
  double frobenius_norm() const { return std::sqrt(frobenius_norm_sq()); }

 private:
  void require_same_shape(const QuaternionMatrix& o) const {
    if (!same_shape(o)) throw DimensionMismatch("quaternion matrix shapes differ");
  }

  int rows_ = 0;
  int cols_ = 0;
  std::vector<Quaternion> data_;
};

inline QuaternionMatrix qmat_mul(const QuaternionMatrix& a, const QuaternionMatrix& b) {
  return a * b;
}

// Complex adjoint: A = A_alpha + A_beta j maps to the 2m x 2n block matrix
// [[A_alpha, A_beta], [-conj(A_beta), conj(A_alpha)]].  Ring homomorphism.
inline Eigen::MatrixXcd complex_adjoint(const QuaternionMatrix& a) {
  const int m = a.rows();
  const int n = a.cols();
  Eigen::MatrixXcd chi(2 * m, 2 * n);
  for (int r = 0; r < m; ++r) {
    for (int c = 0; c < n; ++c) {
      const std::complex<double> alpha = complex_alpha(a(r, c));
      const std::complex<double> beta = complex_beta(a(r, c));
      chi(r, c) = alpha;
      chi(r, n + c) = beta;
      chi(m + r, c) = -std::conj(beta);
      chi(m + r, n + c) = std::conj(alpha);
    }
  }
  return chi;
}

// q-determinant: determinant of the complex adjoint.  Real and nonnegative
// for every quaternion matrix; the imaginary residue is discarded.
inline double q_determinant(const QuaternionMatrix& a) {
  if (a.rows() != a.cols()) throw DimensionMismatch("q-determinant of nonsquare matrix");
  if (a.rows() == 0) return 1.0;
  return complex_adjoint(a).determinant().real();
}

}  // namespace dqzw
