// Dual quaternions q = q_s + q_i * eps with quaternion parts.
#pragma once

#include <cmath>
#include <span>
#include <vector>

#include "dqzw/dual_number.hpp"
#include "dqzw/errors.hpp"
#include "dqzw/quaternion.hpp"

namespace dqzw {

struct DualQuaternion {
  Quaternion s;  // standard part
  Quaternion i;  // infinitesimal part

  constexpr DualQuaternion() = default;
  constexpr DualQuaternion(const Quaternion& s_, const Quaternion& i_) : s(s_), i(i_) {}
  constexpr explicit DualQuaternion(const Quaternion& s_) : s(s_) {}

  constexpr bool appreciable() const { return !s.is_zero(); }

  constexpr DualQuaternion operator+(const DualQuaternion& o) const {
    return {s + o.s, i + o.i};
  }
  constexpr DualQuaternion operator-(const DualQuaternion& o) const {
    return {s - o.s, i - o.i};
  }

  // qp = q_s p_s + (q_s p_i + q_i p_s) eps, quaternion factor order kept.
  constexpr DualQuaternion operator*(const DualQuaternion& o) const {
    return {s * o.s, s * o.i + i * o.s};
  }

  constexpr bool operator==(const DualQuaternion& o) const { return s == o.s && i == o.i; }

  constexpr DualQuaternion conj() const { return {s.conj(), i.conj()}; }
};

inline DualQuaternion dq_mul(const DualQuaternion& q, const DualQuaternion& p) {
  return q * p;
}

// q^{-1} = q_s^{-1} - (q_s^{-1} q_i q_s^{-1}) eps; defined only for
// appreciable q.
inline DualQuaternion dq_inverse(const DualQuaternion& q) {
  if (!q.appreciable()) throw NotAppreciable("inverse of an infinitesimal dual quaternion");
  const Quaternion si = qinv(q.s);
  return {si, -(si * q.i * si)};
}

// Magnitude as a dual number.  For appreciable q the dual part
// (q_s conj(q_i) + q_i conj(q_s)) / (2 |q_s|) is real by symmetry; any
// imaginary residue beyond roundoff indicates a broken invariant.
inline DualNumber dq_magnitude(const DualQuaternion& q) {
  if (!q.appreciable()) return {0.0, q.i.norm()};
  const Quaternion sym = q.s * q.i.conj() + q.i * q.s.conj();
  const double scale = std::max(1.0, std::abs(sym.w));
  if (sym.imag().norm() > 1e-12 * scale)
    throw InternalError("dual magnitude: symmetric product has imaginary residue");
  const double sn = q.s.norm();
  return {sn, sym.w / (2.0 * sn)};
}

// 2-norm of a dual quaternion vector.  The vector is appreciable when its
// standard part is not identically zero; the infinitesimal branch reduces
// to the Euclidean norm of the dual-part magnitudes times eps.
inline DualNumber dqvec_norm2(std::span<const DualQuaternion> p) {
  bool appreciable = false;
  for (const DualQuaternion& q : p)
    if (q.appreciable()) {
      appreciable = true;
      break;
    }
  if (!appreciable) {
    double sum = 0.0;
    for (const DualQuaternion& q : p) sum += q.i.norm_sq();
    return {0.0, std::sqrt(sum)};
  }
  DualNumber sum;
  for (const DualQuaternion& q : p) {
    const DualNumber mag = dq_magnitude(q);
    sum = sum + mag * mag;
  }
  return dual_sqrt(sum);
}

inline DualNumber dqvec_norm2(const std::vector<DualQuaternion>& p) {
  return dqvec_norm2(std::span<const DualQuaternion>(p));
}

}  // namespace dqzw
