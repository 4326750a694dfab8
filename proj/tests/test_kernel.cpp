#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "fieldquanta/kernel.hpp"
#include "support.hpp"

using namespace fieldquanta;
using fqtest::max_abs;

TEST(Nullspace, ZeroMapGivesWholeSpace) {
  const RealMatrix n = kernel::nullspace(RealMatrix(RealMatrix::Zero(3, 3)));
  ASSERT_EQ(n.cols(), 3);
  EXPECT_LE(max_abs(n.transpose() * n - RealMatrix::Identity(3, 3)), 1e-12);
}

TEST(Nullspace, FullRankGivesEmptyBasis) {
  EXPECT_EQ(kernel::nullspace(RealMatrix(RealMatrix::Identity(3, 3))).cols(), 0);
}

TEST(Nullspace, RankOneTwoByTwo) {
  RealMatrix m(2, 2);
  m << 1, 1, 1, 1;
  const RealMatrix n = kernel::nullspace(m);
  ASSERT_EQ(n.cols(), 1);
  EXPECT_LE((m * n).norm(), 1e-12);
  EXPECT_NEAR(std::abs(n(0, 0)), 1.0 / std::sqrt(2.0), 1e-12);
  EXPECT_NEAR(n(0, 0), -n(1, 0), 1e-12);
}

TEST(Nullspace, ComplexMatrix) {
  ComplexMatrix m(2, 2);
  m << Complex(1, 0), Complex(0, 1), Complex(0, -1), Complex(1, 0);
  const ComplexMatrix n = kernel::nullspace(m);
  ASSERT_EQ(n.cols(), 1);
  EXPECT_LE((m * n).norm(), 1e-12);
}

TEST(Nullspace, ResidualAndPermutationStability) {
  kernel::SeededRng rng(11);
  for (int trial = 0; trial < 25; ++trial) {
    const int rows = 3 + trial % 5;
    const int cols = 6;
    const int r = 1 + trial % 4;
    const RealMatrix m = rng.matrix(rows, r) * rng.matrix(r, cols);
    const RealMatrix n = kernel::nullspace(m);
    const int expected = cols - fqtest::lu_rank(m);
    ASSERT_EQ(n.cols(), expected) << "trial " << trial;
    EXPECT_LE((m * n).norm(), 1e-8 * std::max(1.0, kernel::op_norm(m)));
    Eigen::PermutationMatrix<Eigen::Dynamic> p(rows);
    p.setIdentity();
    for (int i = rows - 1; i > 0; --i) std::swap(p.indices()[i], p.indices()[static_cast<int>(rng.next_u64() % (i + 1))]);
    EXPECT_EQ(kernel::nullspace(RealMatrix(p * m)).cols(), n.cols());
  }
}

TEST(Eig, DiagonalSymmetric) {
  const RealMatrix m = RealVector((RealVector(3) << 2, 1, 3).finished()).asDiagonal();
  const auto e = kernel::eig_symmetric(m);
  EXPECT_NEAR(e.values(0), 1.0, 1e-14);
  EXPECT_NEAR(e.values(1), 2.0, 1e-14);
  EXPECT_NEAR(e.values(2), 3.0, 1e-14);
}

TEST(Eig, RotationGeneratorHasImaginaryUnitEigenvalues) {
  const auto e = kernel::eig_general(fqtest::rotation_k());
  ASSERT_EQ(e.values.size(), 2);
  EXPECT_NEAR(std::abs(e.values(0) - Complex(0, -1)), 0.0, 1e-14);
  EXPECT_NEAR(std::abs(e.values(1) - Complex(0, 1)), 0.0, 1e-14);
}

TEST(Eig, RejectsAsymmetricInputOnSymmetricPath) {
  try {
    kernel::eig_symmetric(fqtest::rotation_k());
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InvalidInput);
  }
}

TEST(Eig, SymmetricPropertiesOnSeededMatrices) {
  kernel::SeededRng rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 2 + trial % 7;
    const RealMatrix m = fqtest::random_symmetric(rng, n);
    const auto e = kernel::eig_symmetric(m);
    const RealMatrix q = e.vectors;
    EXPECT_LE(max_abs(q.transpose() * q - RealMatrix::Identity(n, n)), 1e-10);
    EXPECT_LE((m - q * e.values.asDiagonal() * q.transpose()).norm(), 1e-10 * std::max(1.0, m.norm()));
    EXPECT_NEAR(e.values.sum(), m.trace(), 1e-9 * std::max(1.0, std::abs(m.trace())));
    for (int i = 1; i < n; ++i) EXPECT_LE(e.values(i - 1), e.values(i));
  }
}

TEST(Eig, GeneralSpectrumClosedUnderConjugation) {
  kernel::SeededRng rng(8);
  for (int trial = 0; trial < 10; ++trial) {
    const RealMatrix m = rng.matrix(5, 5);
    const auto e = kernel::eig_general(m);
    for (Eigen::Index i = 0; i < e.values.size(); ++i) {
      double best = 1e300;
      for (Eigen::Index j = 0; j < e.values.size(); ++j) best = std::min(best, std::abs(e.values(j) - std::conj(e.values(i))));
      EXPECT_LE(best, 1e-9);
    }
    EXPECT_LE((m.cast<Complex>() * e.vectors - e.vectors * e.values.asDiagonal()).norm(), 1e-9 * m.norm());
  }
}

TEST(Expm, ZeroTimeIsIdentity) {
  kernel::SeededRng rng(2);
  EXPECT_LE(max_abs(kernel::expm(rng.matrix(4, 4), 0.0) - RealMatrix::Identity(4, 4)), 0.0);
}

TEST(Expm, QuarterTurn) {
  const RealMatrix r = kernel::expm(fqtest::rotation_k(), std::numbers::pi / 2);
  EXPECT_LE(max_abs(r - fqtest::rotation_k()), 1e-14);
}

TEST(Expm, MatchesExplicitSeries) {
  kernel::SeededRng rng(3);
  for (int trial = 0; trial < 10; ++trial) {
    const RealMatrix x = rng.matrix(4, 4) / 2.0;
    EXPECT_LE(max_abs(kernel::expm(x, 1.0) - fqtest::exp_series(x, 1.0)), 1e-10);
  }
}

TEST(Expm, OneParameterGroupLaw) {
  kernel::SeededRng rng(4);
  for (int trial = 0; trial < 40; ++trial) {
    RealMatrix x = rng.matrix(4, 4);
    x *= rng.uniform(0.1, 2.0) / kernel::op_norm(x);
    const double s = rng.uniform(-2.0, 2.0);
    const double t = rng.uniform(-2.0, 2.0);
    const RealMatrix lhs = kernel::expm(x, s) * kernel::expm(x, t);
    const RealMatrix rhs = kernel::expm(x, s + t);
    EXPECT_LE(max_abs(lhs - rhs), 1e-8 * std::max(1.0, max_abs(rhs)));
  }
}

TEST(Expm, ComplexAgreesWithReal) {
  kernel::SeededRng rng(6);
  const RealMatrix x = rng.matrix(3, 3);
  const ComplexMatrix z = kernel::expm(ComplexMatrix(x.cast<Complex>()), 0.7);
  EXPECT_LE(max_abs(z.real() - kernel::expm(x, 0.7)), 1e-12);
  EXPECT_LE(max_abs(z.imag()), 1e-12);
}

TEST(Vec, RoundTripAndCommutatorOperator) {
  kernel::SeededRng rng(7);
  const RealMatrix x = rng.matrix(3, 3);
  const RealMatrix c = rng.matrix(3, 3);
  EXPECT_EQ(kernel::unvec(kernel::vec(c), 3, 3), c);
  const RealVector lhs = kernel::commutator_operator(x) * kernel::vec(c);
  EXPECT_LE((kernel::unvec(lhs, 3, 3) - (x * c - c * x)).norm(), 1e-12);
}

TEST(Tolerance, RejectsNonPositive) {
  TolerancePolicy t;
  t.eps_rank = 0.0;
  EXPECT_THROW(t.validate(), Error);
  t.eps_rank = 1e-8;
  t.eps_rel = -1.0;
  EXPECT_THROW(t.validate(), Error);
}

TEST(Guards, NonFiniteAndNonSquare) {
  RealMatrix m = RealMatrix::Identity(2, 2);
  m(0, 1) = std::nan("");
  EXPECT_THROW(kernel::require_finite(m, "m"), Error);
  EXPECT_THROW(kernel::require_square(2, 3, "m"), Error);
}

TEST(SeededRng, SameSeedSameStream) {
  kernel::SeededRng a(42);
  kernel::SeededRng b(42);
  for (int i = 0; i < 100; ++i) {
    EXPECT_EQ(a.next_u64(), b.next_u64());
  }
  EXPECT_EQ(a.matrix(3, 3), b.matrix(3, 3));
  kernel::SeededRng c(43);
  EXPECT_NE(a.next_u64(), c.next_u64());
}

TEST(SeededRng, UniformRange) {
  kernel::SeededRng rng(1);
  for (int i = 0; i < 1000; ++i) {
    const double u = rng.uniform();
    ASSERT_GE(u, 0.0);
    ASSERT_LT(u, 1.0);
  }
}
