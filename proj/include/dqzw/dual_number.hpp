// Dual numbers d = d_s + d_i * eps with eps != 0 and eps^2 = 0.
#pragma once

#include <cmath>
#include <compare>

#include "dqzw/errors.hpp"

namespace dqzw {

struct DualNumber {
  double s = 0.0;  // standard part
  double i = 0.0;  // infinitesimal part

  constexpr DualNumber() = default;
  constexpr DualNumber(double s_, double i_) : s(s_), i(i_) {}
  constexpr explicit DualNumber(double real) : s(real) {}

  constexpr bool appreciable() const { return s != 0.0; }

  constexpr DualNumber operator+(const DualNumber& o) const { return {s + o.s, i + o.i}; }
  constexpr DualNumber operator-(const DualNumber& o) const { return {s - o.s, i - o.i}; }
  constexpr DualNumber operator-() const { return {-s, -i}; }

  // eps^2 = 0: the products of infinitesimal parts vanish.
  constexpr DualNumber operator*(const DualNumber& o) const {
    return {s * o.s, s * o.i + i * o.s};
  }

  constexpr bool operator==(const DualNumber& o) const { return s == o.s && i == o.i; }
};

inline DualNumber dual_mul(const DualNumber& d, const DualNumber& b) { return d * b; }

// Division.  The appreciable branch is exact; when both standard parts are
// zero the quotient is d_i/b_i + c*eps with the free real c chosen by the
// caller (0 is the canonical representative).
inline DualNumber dual_div(const DualNumber& d, const DualNumber& b, double c = 0.0) {
  if (b.s != 0.0) {
    const double q = d.s / b.s;
    return {q, d.i / b.s - q * (b.i / b.s)};
  }
  if (d.s == 0.0 && b.i != 0.0) return {d.i / b.i, c};
  throw UndefinedDivision("dual division undefined for these operands");
}

// Total order: standard parts first, infinitesimal parts break ties.
inline std::strong_ordering dual_cmp(const DualNumber& d, const DualNumber& b) {
  if (d.s < b.s) return std::strong_ordering::less;
  if (d.s > b.s) return std::strong_ordering::greater;
  if (d.i < b.i) return std::strong_ordering::less;
  if (d.i > b.i) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

inline bool operator<(const DualNumber& a, const DualNumber& b) {
  return dual_cmp(a, b) == std::strong_ordering::less;
}
inline bool operator<=(const DualNumber& a, const DualNumber& b) {
  return dual_cmp(a, b) != std::strong_ordering::greater;
}

// sqrt(d) = sqrt(d_s) + d_i / (2 sqrt(d_s)) * eps for d_s > 0, and 0 at d = 0.
inline DualNumber dual_sqrt(const DualNumber& d) {
  if (d.s > 0.0) {
    const double root = std::sqrt(d.s);
    return {root, d.i / (2.0 * root)};
  }
  if (d.s == 0.0 && d.i == 0.0) return {0.0, 0.0};
  throw DomainError("dual square root undefined for this operand");
}

}  // namespace dqzw
