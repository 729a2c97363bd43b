// Quaternion scalar arithmetic over the Hamilton basis {1, i, j, k}.
#pragma once

#include <cmath>
#include <complex>

#include "dqzw/errors.hpp"

namespace dqzw {

struct Quaternion {
  double w = 0.0;  // real component g1
  double x = 0.0;  // i component g2
  double y = 0.0;  // j component g3
  double z = 0.0;  // k component g4

  constexpr Quaternion() = default;
  constexpr Quaternion(double w_, double x_, double y_, double z_)
      : w(w_), x(x_), y(y_), z(z_) {}
  constexpr explicit Quaternion(double real) : w(real) {}

  static constexpr Quaternion unit_i() { return {0, 1, 0, 0}; }
  static constexpr Quaternion unit_j() { return {0, 0, 1, 0}; }
  static constexpr Quaternion unit_k() { return {0, 0, 0, 1}; }

  constexpr Quaternion operator+(const Quaternion& o) const {
    return {w + o.w, x + o.x, y + o.y, z + o.z};
  }
  constexpr Quaternion operator-(const Quaternion& o) const {
    return {w - o.w, x - o.x, y - o.y, z - o.z};
  }
  constexpr Quaternion operator-() const { return {-w, -x, -y, -z}; }

  constexpr Quaternion& operator+=(const Quaternion& o) {
    w += o.w; x += o.x; y += o.y; z += o.z;
    return *this;
  }
  constexpr Quaternion& operator-=(const Quaternion& o) {
    w -= o.w; x -= o.x; y -= o.y; z -= o.z;
    return *this;
  }

  // Hamilton product; ij = k, jk = i, ki = j, anticommuting units.
  constexpr Quaternion operator*(const Quaternion& o) const {
    return {w * o.w - x * o.x - y * o.y - z * o.z,
            w * o.x + x * o.w + y * o.z - z * o.y,
            w * o.y - x * o.z + y * o.w + z * o.x,
            w * o.z + x * o.y - y * o.x + z * o.w};
  }
  constexpr Quaternion& operator*=(const Quaternion& o) {
    *this = *this * o;
    return *this;
  }

  constexpr Quaternion operator*(double s) const { return {w * s, x * s, y * s, z * s}; }
  constexpr Quaternion operator/(double s) const { return {w / s, x / s, y / s, z / s}; }

  friend constexpr Quaternion operator*(double s, const Quaternion& q) { return q * s; }

  constexpr bool operator==(const Quaternion& o) const {
    return w == o.w && x == o.x && y == o.y && z == o.z;
  }

  constexpr Quaternion conj() const { return {w, -x, -y, -z}; }

  constexpr double norm_sq() const { return w * w + x * x + y * y + z * z; }
  double norm() const { return std::sqrt(norm_sq()); }

  constexpr bool is_zero() const { return w == 0.0 && x == 0.0 && y == 0.0 && z == 0.0; }

  // Imaginary part as a quaternion with zero real component.
  constexpr Quaternion imag() const { return {0.0, x, y, z}; }
};

inline Quaternion qmul(const Quaternion& a, const Quaternion& b) { return a * b; }

inline Quaternion conj(const Quaternion& q) { return q.conj(); }

inline double abs(const Quaternion& q) { return q.norm(); }

// conj(g) / |g|^2.  Throws ZeroDivisor for g = 0.
inline Quaternion qinv(const Quaternion& g) {
  const double n2 = g.norm_sq();
  if (n2 == 0.0) throw ZeroDivisor("quaternion inverse of zero");
  return g.conj() / n2;
}

// q rescaled to unit norm.  Caller guarantees q != 0.
inline Quaternion normalized(const Quaternion& q) { return q / q.norm(); }

inline bool approx_equal(const Quaternion& a, const Quaternion& b, double tol) {
  return (a - b).norm() <= tol;
}

// Complex pair (alpha, beta) with q = alpha + beta * j.
inline std::complex<double> complex_alpha(const Quaternion& q) { return {q.w, q.x}; }
inline std::complex<double> complex_beta(const Quaternion& q) { return {q.y, q.z}; }

inline Quaternion from_complex_pair(const std::complex<double>& alpha,
                                    const std::complex<double>& beta) {
  return {alpha.real(), alpha.imag(), beta.real(), beta.imag()};
}

}  // namespace dqzw
