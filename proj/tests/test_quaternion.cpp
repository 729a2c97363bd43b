#include <gtest/gtest.h>

#include <random>

#include "dqzw/qlu.hpp"
#include "dqzw/qqr.hpp"
#include "dqzw/qsvd.hpp"
#include "dqzw/quaternion.hpp"
#include "dqzw/quaternion_matrix.hpp"
#include "test_support.hpp"

using namespace dqzw;
using test::random_qmatrix;
using test::random_quaternion;

namespace {

constexpr Quaternion kI = Quaternion::unit_i();
constexpr Quaternion kJ = Quaternion::unit_j();
constexpr Quaternion kK = Quaternion::unit_k();

}  // namespace

TEST(Quaternion, MultiplicationTable) {
  EXPECT_EQ(kI * kJ, kK);
  EXPECT_EQ(kJ * kK, kI);
  EXPECT_EQ(kK * kI, kJ);
  EXPECT_EQ(kJ * kI, -kK);
  EXPECT_EQ(kI * kI, Quaternion(-1.0));
  EXPECT_EQ(kJ * kJ, Quaternion(-1.0));
  EXPECT_EQ(kK * kK, Quaternion(-1.0));
}

TEST(Quaternion, IdentityElement) {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 100; ++t) {
    const Quaternion q = random_quaternion(rng);
    EXPECT_EQ(Quaternion(1.0) * q, q);
    EXPECT_EQ(q * Quaternion(1.0), q);
  }
}

TEST(Quaternion, ProductMatchesRealRepresentation) {
  // (i+j)(i-j) = -2k, cross-checked against the 4x4 real representation.
  const Quaternion a = kI + kJ;
  const Quaternion b = kI - kJ;
  EXPECT_EQ(a * b, -2.0 * kK);
  EXPECT_EQ(test::qmul_via_real_rep(a, b), -2.0 * kK);

  std::mt19937_64 rng(12);
  for (int t = 0; t < 200; ++t) {
    const Quaternion p = random_quaternion(rng, 3.0);
    const Quaternion q = random_quaternion(rng, 3.0);
    EXPECT_TRUE(approx_equal(p * q, test::qmul_via_real_rep(p, q), 1e-12));
  }
}

TEST(Quaternion, Inverse) {
  EXPECT_EQ(qinv(Quaternion(1.0)), Quaternion(1.0));
  EXPECT_EQ(qinv(kI), -kI);
  const Quaternion g{2.0, 2.0, 0.0, 0.0};
  EXPECT_TRUE(approx_equal(qinv(g), Quaternion{2.0 / 8.0, -2.0 / 8.0, 0.0, 0.0}, 1e-15));
  EXPECT_TRUE(approx_equal(g * qinv(g), Quaternion(1.0), 1e-15));
  EXPECT_THROW(qinv(Quaternion()), ZeroDivisor);
}

TEST(Quaternion, ConjAntiHomomorphismAndNormMultiplicativity) {
  std::mt19937_64 rng(13);
  for (int t = 0; t < 500; ++t) {
    const Quaternion a = random_quaternion(rng, 2.0);
    const Quaternion b = random_quaternion(rng, 2.0);
    EXPECT_TRUE(approx_equal((a * b).conj(), b.conj() * a.conj(), 1e-12));
    EXPECT_NEAR((a * b).norm(), a.norm() * b.norm(), 1e-12 * (1.0 + a.norm() * b.norm()));
  }
}

TEST(QuaternionMatrix, ProductBasics) {
  std::mt19937_64 rng(14);
  const QuaternionMatrix a = random_qmatrix(rng, 4, 4);
  EXPECT_EQ(QuaternionMatrix::identity(4) * a, a);

  QuaternionMatrix si(1, 1), sj(1, 1);
  si(0, 0) = kI;
  sj(0, 0) = kJ;
  EXPECT_EQ((si * sj)(0, 0), kK);

  QuaternionMatrix bad(3, 2);
  EXPECT_THROW(a * bad, DimensionMismatch);
}

TEST(QuaternionMatrix, ConjTransposeInvolution) {
  std::mt19937_64 rng(15);
  const QuaternionMatrix a = random_qmatrix(rng, 3, 5);
  EXPECT_EQ(a.conj_transpose().conj_transpose(), a);
}

TEST(ComplexAdjoint, Scalars) {
  QuaternionMatrix one(1, 1), i(1, 1);
  one(0, 0) = Quaternion(1.0);
  i(0, 0) = kI;
  const Eigen::MatrixXcd chi1 = complex_adjoint(one);
  EXPECT_TRUE(chi1.isApprox(Eigen::MatrixXcd::Identity(2, 2)));
  const Eigen::MatrixXcd chi_i = complex_adjoint(i);
  EXPECT_EQ(chi_i(0, 0), std::complex<double>(0, 1));
  EXPECT_EQ(chi_i(1, 1), std::complex<double>(0, -1));
  EXPECT_EQ(chi_i(0, 1), std::complex<double>(0, 0));
  EXPECT_EQ(chi_i(1, 0), std::complex<double>(0, 0));
}

TEST(ComplexAdjoint, RingHomomorphism) {
  std::mt19937_64 rng(16);
  for (int t = 0; t < 20; ++t) {
    const QuaternionMatrix a = random_qmatrix(rng, 3, 3);
    const QuaternionMatrix b = random_qmatrix(rng, 3, 3);
    const Eigen::MatrixXcd lhs = complex_adjoint(a * b);
    const Eigen::MatrixXcd rhs = complex_adjoint(a) * complex_adjoint(b);
    EXPECT_LE((lhs - rhs).norm(), 1e-10 * (1.0 + rhs.norm()));
  }
  // 4x4 as well, per the stated property size
  for (int t = 0; t < 10; ++t) {
    const QuaternionMatrix a = random_qmatrix(rng, 4, 4);
    const QuaternionMatrix b = random_qmatrix(rng, 4, 4);
    EXPECT_LE((complex_adjoint(a * b) - complex_adjoint(a) * complex_adjoint(b)).norm(),
              1e-10 * (1.0 + complex_adjoint(a).norm() * complex_adjoint(b).norm()));
  }
}

TEST(QDeterminant, KnownValues) {
  EXPECT_NEAR(q_determinant(QuaternionMatrix::identity(3)), 1.0, 1e-15);
  QuaternionMatrix i(1, 1), two(1, 1);
  i(0, 0) = kI;
  two(0, 0) = Quaternion(2.0);
  EXPECT_NEAR(q_determinant(i), 1.0, 1e-15);
  EXPECT_NEAR(q_determinant(two), 4.0, 1e-15);
  QuaternionMatrix rect(2, 3);
  EXPECT_THROW(q_determinant(rect), DimensionMismatch);
}

TEST(QDeterminant, Multiplicative) {
  std::mt19937_64 rng(17);
  for (int t = 0; t < 30; ++t) {
    const QuaternionMatrix a = random_qmatrix(rng, 3, 3);
    const QuaternionMatrix b = random_qmatrix(rng, 3, 3);
    const double dab = q_determinant(a * b);
    const double da_db = q_determinant(a) * q_determinant(b);
    EXPECT_NEAR(dab, da_db, 1e-8 * std::max(1.0, std::abs(da_db)));
    EXPECT_GE(q_determinant(a), 0.0);
  }
}

TEST(Determinism, FactorizationsAreBitStable) {
  std::mt19937_64 rng(18);
  const QuaternionMatrix a = test::random_dominant_qmatrix(rng, 8);
  const QluResult lu1 = qlu(a), lu2 = qlu(a);
  EXPECT_TRUE(test::bit_identical(lu1.l, lu2.l));
  EXPECT_TRUE(test::bit_identical(lu1.u, lu2.u));
  const QqrResult qr1 = qqr(a), qr2 = qqr(a);
  EXPECT_TRUE(test::bit_identical(qr1.q, qr2.q));
  EXPECT_TRUE(test::bit_identical(qr1.r, qr2.r));
  const QsvdResult sv1 = qsvd(a), sv2 = qsvd(a);
  EXPECT_TRUE(test::bit_identical(sv1.u, sv2.u));
  EXPECT_TRUE(test::bit_identical(sv1.v, sv2.v));
  EXPECT_EQ(sv1.sigma, sv2.sigma);
}
