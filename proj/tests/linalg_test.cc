// Copyright 2026 The qkernel Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

#include <gtest/gtest.h>

#include "oracles.h"
#include "qkernel/kernel_matrix.h"
#include "qkernel/linalg.h"

namespace qkernel {
namespace {

KernelMatrix diag(std::initializer_list<double> values) {
  Eigen::VectorXd d(static_cast<Eigen::Index>(values.size()));
  Eigen::Index i = 0;
  for (double v : values) d(i++) = v;
  return KernelMatrix(Eigen::MatrixXd(d.asDiagonal()));
}

KernelMatrix random_psd(std::mt19937_64& rng, Eigen::Index n) {
  std::uniform_int_distribution<Eigen::Index> rank(1, n);
  return KernelMatrix(oracle::random_psd(rng, n, rank(rng)));
}

TEST(KernelMatrix, RejectsAsymmetricAndNonFinite) {
  EXPECT_THROW(KernelMatrix(Eigen::MatrixXd{{1, 2}, {3, 4}}), std::invalid_argument);
  EXPECT_THROW(KernelMatrix(Eigen::MatrixXd(2, 3)), std::invalid_argument);
  EXPECT_THROW(KernelMatrix(Eigen::MatrixXd{{std::numeric_limits<double>::quiet_NaN()}}), std::invalid_argument);
  EXPECT_NO_THROW(KernelMatrix::symmetrized(Eigen::MatrixXd{{1, 2}, {2.0000001, 4}}));
}

TEST(KernelMatrix, ShiftAndArithmetic) {
  const KernelMatrix a = diag({1, 2});
  EXPECT_EQ(a.shifted(0.5), diag({1.5, 2.5}));
  EXPECT_EQ(a.scaled(2), diag({2, 4}));
  EXPECT_EQ(a + a, diag({2, 4}));
  EXPECT_EQ(a - a, KernelMatrix::zero(2));
  EXPECT_THROW(a + KernelMatrix::identity(3), std::invalid_argument);
}

TEST(SymEigvals, Identity) {
  EXPECT_EQ(sym_eigvals(KernelMatrix::identity(3)), Eigen::Vector3d(1, 1, 1));
}

TEST(SymEigvals, DiagonalAscending) {
  const Eigen::VectorXd ev = sym_eigvals(diag({2, -1}));
  EXPECT_EQ(ev, Eigen::Vector2d(-1, 2));
}

TEST(SymEigvals, CompanionMatrixOracle) {
  std::mt19937_64 rng(21);
  std::normal_distribution<double> g;
  for (int t = 0; t < 20; ++t) {
    Eigen::MatrixXd a(5, 5);
    for (int i = 0; i < 5; ++i) {
      for (int j = 0; j < 5; ++j) a(i, j) = g(rng);
    }
    const KernelMatrix s = KernelMatrix::symmetrized(a);
    const auto roots = oracle::companion_roots(oracle::charpoly(s.matrix()));
    const Eigen::VectorXd ev = sym_eigvals(s);
    ASSERT_EQ(roots.size(), 5u);
    for (int i = 0; i < 5; ++i) EXPECT_NEAR(ev(i), roots[static_cast<std::size_t>(i)], 1e-8);
  }
}

TEST(MinEig, Values) {
  EXPECT_DOUBLE_EQ(min_eig(KernelMatrix::identity(4)), 1.0);
  EXPECT_DOUBLE_EQ(min_eig(diag({1, 2})), 1.0);
  const KernelMatrix a = diag({3, 5});
  EXPECT_EQ(min_eig(a - a), 0.0);
}

TEST(LoewnerGeq, Basic) {
  EXPECT_TRUE(loewner_geq(KernelMatrix::identity(3), KernelMatrix::zero(3)));
  EXPECT_FALSE(loewner_geq(KernelMatrix::zero(3), KernelMatrix::identity(3)));
}

TEST(LoewnerGeq, TransitiveOnPsdIncrements) {
  std::mt19937_64 rng(22);
  for (int t = 0; t < 100; ++t) {
    const Eigen::Index n = 1 + t % 6;
    const KernelMatrix c = random_psd(rng, n);
    const KernelMatrix b = c + random_psd(rng, n);
    const KernelMatrix a = b + random_psd(rng, n);
    EXPECT_TRUE(loewner_geq(a, b));
    EXPECT_TRUE(loewner_geq(b, c));
    EXPECT_TRUE(loewner_geq(a, c));
  }
}

TEST(SolveSpd, Examples) {
  const Eigen::VectorXd x = solve_spd(KernelMatrix::identity(2).scaled(2), Eigen::Vector2d(4, 6));
  EXPECT_LE((x - Eigen::Vector2d(2, 3)).cwiseAbs().maxCoeff(), 1e-15);
  const Eigen::Vector3d y(0.1, -7, 3);
  EXPECT_EQ(solve_spd(KernelMatrix::identity(3), y), y);
}

TEST(SolveSpd, MultiplyBackOracle) {
  std::mt19937_64 rng(23);
  for (int t = 0; t < 50; ++t) {
    const KernelMatrix a = random_psd(rng, 6).shifted(0.1);
    const Eigen::VectorXd y = oracle::random_vector(rng, 6);
    const Eigen::VectorXd x = solve_spd(a, y);
    EXPECT_LE((a.matrix() * x - y).norm() / y.norm(), 1e-8);
  }
}

TEST(SolveSpd, RoundTripUpToConditionMillion) {
  std::mt19937_64 rng(24);
  std::uniform_real_distribution<double> logc(0.0, 6.0);
  std::normal_distribution<double> g;
  for (int t = 0; t < 100; ++t) {
    const int n = 2 + t % 10;
    Eigen::MatrixXd r(n, n);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) r(i, j) = g(rng);
    }
    const Eigen::MatrixXd q = Eigen::HouseholderQR<Eigen::MatrixXd>(r).householderQ();
    const double c = std::pow(10.0, logc(rng));
    Eigen::VectorXd s(n);
    for (int i = 0; i < n; ++i) s(i) = std::pow(c, -static_cast<double>(i) / (n - 1));
    const KernelMatrix a = KernelMatrix::symmetrized(q * s.asDiagonal() * q.transpose());
    const Eigen::VectorXd y = oracle::random_vector(rng, n);
    EXPECT_LE((a.matrix() * solve_spd(a, y) - y).norm() / y.norm(), 1e-8);
  }
}

TEST(SolveSpd, ThrowsWhenNotPositiveDefinite) {
  try {
    solve_spd(diag({1, -0.5}), Eigen::Vector2d(1, 1));
    FAIL() << "expected NotPositiveDefinite";
  } catch (const NotPositiveDefinite& e) {
    EXPECT_DOUBLE_EQ(e.min_eig(), -0.5);
  }
  EXPECT_THROW(solve_spd(KernelMatrix::zero(2), Eigen::Vector2d(1, 1)), NotPositiveDefinite);
}

TEST(QuadFormInv, Examples) {
  const Eigen::Vector3d y(1, 2, 2);
  EXPECT_DOUBLE_EQ(quad_form_inv(y, KernelMatrix::identity(3)), 9.0);
  EXPECT_DOUBLE_EQ(quad_form_inv(Eigen::VectorXd::Constant(1, 2.0), diag({4})), 1.0);
}

TEST(QuadFormInv, ExplicitInverseOracle) {
  std::mt19937_64 rng(25);
  for (int t = 0; t < 50; ++t) {
    const Eigen::Index n = 1 + t % 6;
    const KernelMatrix a = random_psd(rng, n).shifted(0.2);
    const Eigen::VectorXd y = oracle::random_vector(rng, n);
    const double expected = y.dot(oracle::gauss_jordan_inverse(a.matrix()) * y);
    EXPECT_NEAR(quad_form_inv(y, a), expected, 1e-8 * (1.0 + std::abs(expected)));
  }
}

TEST(SpdInverse, MatchesExplicitInverse) {
  std::mt19937_64 rng(26);
  for (int t = 0; t < 30; ++t) {
    const KernelMatrix a = random_psd(rng, 5).shifted(0.5);
    EXPECT_LE((spd_inverse(a).matrix() - oracle::gauss_jordan_inverse(a.matrix())).cwiseAbs().maxCoeff(), 1e-10);
  }
}

TEST(InverseAntiMonotone, RandomPairs) {
  std::mt19937_64 rng(27);
  for (int t = 0; t < 200; ++t) {
    const Eigen::Index n = 1 + t % 8;
    const KernelMatrix b = random_psd(rng, n).shifted(0.01);
    const KernelMatrix a = b + random_psd(rng, n);
    EXPECT_TRUE(loewner_geq(spd_inverse(b), spd_inverse(a), 1e-8));
  }
}

TEST(PsdShiftEvent, ExactEstimateHolds) {
  const KernelMatrix k(Eigen::MatrixXd{{1.0, 0.4}, {0.4, 1.0}});
  EXPECT_TRUE(psd_shift_event(k, k, 1.0));
  EXPECT_TRUE(psd_shift_event(k, k, 1e-6));
}

TEST(PsdShiftEvent, AdversarialShiftFails) {
  const KernelMatrix k(Eigen::MatrixXd{{1.0, 0.4}, {0.4, 1.0}});
  EXPECT_FALSE(psd_shift_event(k.shifted(-1.0), k, 1.0));
  EXPECT_THROW(psd_shift_event(k, k, 0.0), std::invalid_argument);
}

TEST(PsdShiftEvent, ImpliesMinEigBound) {
  std::mt19937_64 rng(28);
  std::normal_distribution<double> g(0.0, 0.05);
  int events = 0;
  for (int t = 0; t < 300; ++t) {
    const Eigen::Index n = 2 + t % 6;
    const KernelMatrix k_tilde = random_psd(rng, n);
    Eigen::MatrixXd noise(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
      for (Eigen::Index j = 0; j < n; ++j) noise(i, j) = g(rng);
    }
    const KernelMatrix k_hat = k_tilde + KernelMatrix::symmetrized(noise);
    if (!psd_shift_event(k_hat, k_tilde, 1.0)) continue;
    ++events;
    EXPECT_GE(min_eig(k_hat.shifted(1.0)), min_eig(k_tilde) + 0.5 - 2e-9);
  }
  EXPECT_GT(events, 100);
}

TEST(Sandwich, NoiselessExactEstimate) {
  const KernelMatrix k(Eigen::MatrixXd{{1.0, 0.2}, {0.2, 1.0}});
  EXPECT_TRUE(sandwich_inequality_check(k, k, 1.0, 0.0));
}

TEST(Sandwich, NotPositiveDefiniteReportsFalse) {
  const KernelMatrix k = KernelMatrix::identity(2);
  EXPECT_FALSE(sandwich_inequality_check(k.shifted(-5.0), k, 1.0, 0.0));
}

TEST(Remark1Operator, Examples) {
  std::mt19937_64 rng(29);
  const KernelMatrix w = random_psd(rng, 4);
  EXPECT_TRUE(remark1_operator_check(w, 1.0));
  EXPECT_TRUE(remark1_operator_check(KernelMatrix::zero(3), 2.0));
}

}  // namespace
}  // namespace qkernel
