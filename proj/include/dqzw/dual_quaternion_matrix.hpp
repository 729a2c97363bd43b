// Dual quaternion matrices A = A_s + A_i * eps over QuaternionMatrix parts.
#pragma once

#include <cmath>
#include <utility>

#include "dqzw/errors.hpp"
#include "dqzw/quaternion_matrix.hpp"

namespace dqzw {

class DualQuaternionMatrix {
 public:
  DualQuaternionMatrix() = default;
  DualQuaternionMatrix(QuaternionMatrix standard, QuaternionMatrix infinitesimal)
      : s_(std::move(standard)), i_(std::move(infinitesimal)) {
    if (!s_.same_shape(i_))
      throw DimensionMismatch("dual quaternion matrix parts must share a shape");
  }
  DualQuaternionMatrix(int rows, int cols) : s_(rows, cols), i_(rows, cols) {}

  static DualQuaternionMatrix identity(int n) {
    return {QuaternionMatrix::identity(n), QuaternionMatrix(n, n)};
  }

  int rows() const { return s_.rows(); }
  int cols() const { return s_.cols(); }

  const QuaternionMatrix& s() const { return s_; }
  const QuaternionMatrix& i() const { return i_; }
  QuaternionMatrix& s() { return s_; }
  QuaternionMatrix& i() { return i_; }

  DualQuaternionMatrix operator+(const DualQuaternionMatrix& o) const {
    return {s_ + o.s_, i_ + o.i_};
  }
  DualQuaternionMatrix operator-(const DualQuaternionMatrix& o) const {
    return {s_ - o.s_, i_ - o.i_};
  }

  // (AB)_s = A_s B_s, (AB)_i = A_s B_i + A_i B_s.
  DualQuaternionMatrix operator*(const DualQuaternionMatrix& o) const {
    return {s_ * o.s_, s_ * o.i_ + i_ * o.s_};
  }

  DualQuaternionMatrix conj_transpose() const {
    return {s_.conj_transpose(), i_.conj_transpose()};
  }

  bool operator==(const DualQuaternionMatrix& o) const {
    return s_ == o.s_ && i_ == o.i_;
  }

  // F^R norm: sqrt(||A_s||_F^2 + ||A_i||_F^2), a plain real.
  double fr_norm() const {
    return std::sqrt(s_.frobenius_norm_sq() + i_.frobenius_norm_sq());
  }

 private:
  QuaternionMatrix s_;
  QuaternionMatrix i_;
};

inline double fr_norm(const DualQuaternionMatrix& a) { return a.fr_norm(); }

}  // namespace dqzw
