// Copyright 2026 The lpopt Authors
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

#include <gtest/gtest.h>

#include "lpopt/error.h"
#include "lpopt/norms.h"
#include "lpopt/oracle.h"
#include "lpopt/pqnorm.h"
#include "test_util.h"

namespace lpopt {
namespace {

using testing::RandomTensor;
using testing::RelErr;

void ExpectMlArgmax(const Tensor& a, const Exponent& p, const OracleResult& o) {
  ASSERT_EQ(static_cast<int>(o.argmax.size()), a.order());
  for (const auto& x : o.argmax) EXPECT_LE(LpNorm(x, p), 1.0 + 1e-12);
  EXPECT_NEAR(EvalMultilinear(a, o.argmax), o.value, 1e-12 * (1 + std::abs(o.value)));
}

TEST(ExactMlLinfTest, Hadamard) {
  const Tensor a({2, 2}, {1, 1, 1, -1});
  const OracleResult o = ExactMlLinf(a);
  EXPECT_EQ(o.value, 2.0);
  EXPECT_EQ(o.method, OracleMethod::kVertexEnum);
  EXPECT_EQ(o.resolution, 0.0);
  ExpectMlArgmax(a, Exponent::Infinity(), o);
}

TEST(ExactMlLinfTest, AllOnesCube) {
  const Tensor a({2, 2, 2}, std::vector<double>(8, 1.0));
  EXPECT_EQ(ExactMlLinf(a).value, 8.0);
}

TEST(ExactMlLinfTest, SingleEntry) {
  std::vector<double> e(12, 0.0);
  e[7] = -2.5;
  const Tensor a({2, 3, 2}, e);
  const OracleResult o = ExactMlLinf(a);
  EXPECT_EQ(o.value, 2.5);
  ExpectMlArgmax(a, Exponent::Infinity(), o);
}

TEST(ExactMlLinfTest, MatchesBruteForceOverAllSlots) {
  Rng rng(1);
  const Tensor a = RandomTensor({3, 2, 3}, rng);
  // Enumerate every slot, including the last one.
  double best = -INFINITY;
  for (int m = 0; m < (1 << 8); ++m) {
    std::vector<Eigen::VectorXd> xs = {Eigen::VectorXd(3), Eigen::VectorXd(2),
                                       Eigen::VectorXd(3)};
    int bit = 0;
    for (auto& x : xs)
      for (int i = 0; i < x.size(); ++i) x[i] = (m >> bit++) & 1 ? -1.0 : 1.0;
    best = std::max(best, testing::NaiveMultilinear(a, xs));
  }
  EXPECT_NEAR(ExactMlLinf(a).value, best, 1e-12);
}

TEST(ExactMlLinfTest, SizeGate) {
  try {
    ExactMlLinf(Tensor::Zeros({13, 13}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kResource);
  }
}

TEST(SphereGridTest, PointsOnSphere) {
  const Exponent p = Exponent::FromDouble(3);
  for (const auto& x : SphereGrid(3, 6, p)) EXPECT_NEAR(LpNorm(x, p), 1.0, 1e-12);
  EXPECT_EQ(SphereGrid(3, 1, Exponent::Infinity()).size(), 8u);
}

TEST(GridMlTest, IdentityAtThree) {
  const Exponent p = Exponent::FromDouble(3);
  const Eigen::MatrixXd b = Eigen::MatrixXd::Identity(2, 2);
  const OracleResult o = GridMl(Tensor::FromMatrix(b), p, 64);
  const double relax = SolveVecp(b, p).value;
  EXPECT_LE(std::abs(o.value - relax) / relax, 0.02);
  EXPECT_EQ(o.method, OracleMethod::kGrid);
  EXPECT_GT(o.resolution, 0.0);
  ExpectMlArgmax(Tensor::FromMatrix(b), p, o);
}

TEST(GridMlTest, RankOneClosedForm) {
  const Exponent p = Exponent::FromDouble(4);
  const double q = p.conjugate();
  Eigen::VectorXd u(2), v(3), w(2);
  u << 0.2, 1.0;
  v << 0.5, 0.1, 0.7;
  w << 1.0, 0.3;
  std::vector<double> e;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 2; ++k) e.push_back(u[i] * v[j] * w[k]);
  const Tensor a({2, 3, 2}, e);
  const double closed = LpNorm(u, q) * LpNorm(v, q) * LpNorm(w, q);
  const OracleResult o = GridMl(a, p, 32);
  EXPECT_LE(o.value, closed + 1e-12);
  EXPECT_GE(o.value, closed * (1 - 0.05));
  EXPECT_NEAR(PolishMl(a, p, o).value, closed, 1e-9);
  ExpectMlArgmax(a, p, o);
}

TEST(GridMlTest, RefinementNeverDecreases) {
  Rng rng(2);
  const Tensor a = RandomTensor({2, 3, 2}, rng);
  const Exponent p = Exponent::FromDouble(3);
  double prev = -INFINITY;
  for (int steps : {2, 4, 8, 16}) {
    const double v = GridMl(a, p, steps).value;
    EXPECT_GE(v, prev - 1e-12);
    prev = v;
  }
}

TEST(GridMlTest, BudgetGate) {
  try {
    GridMl(Tensor::Zeros({6, 6, 2}), Exponent::FromDouble(3), 200);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kResource);
  }
}

TEST(GridMlTest, AgreesWithVertexEnumerationAtInfinity) {
  Rng rng(3);
  const Tensor a = RandomTensor({3, 2, 2}, rng);
  EXPECT_NEAR(GridMl(a, Exponent::Infinity(), 1).value, ExactMlLinf(a).value, 1e-12);
}

TEST(PolishMlTest, NeverDecreases) {
  Rng rng(4);
  const Exponent p = Exponent::FromDouble(3);
  for (int rep = 0; rep < 5; ++rep) {
    const Tensor a = RandomTensor({3, 3, 2}, rng);
    const OracleResult g = GridMl(a, p, 4);
    const OracleResult o = PolishMl(a, p, g);
    EXPECT_GE(o.value, g.value);
    ExpectMlArgmax(a, p, o);
  }
}

TEST(GridHpTest, CubicOnTheBox) {
  // f(x) = 3 x_1^2 x_2.
  const Tensor a({2, 2, 2}, {0, 1, 1, 0, 1, 0, 0, 0});
  const OracleResult o = GridHp(a, Exponent::Infinity(), 8);
  EXPECT_NEAR(o.value, 3.0, 1e-12);
  ASSERT_EQ(o.argmax.size(), 1u);
  EXPECT_NEAR(std::abs(o.argmax[0][0]), 1.0, 1e-12);
  EXPECT_NEAR(o.argmax[0][1], 1.0, 1e-12);
}

TEST(GridHpTest, SquaredNorm) {
  const Tensor a({2, 2}, {1, 0, 0, 1});
  EXPECT_NEAR(GridHp(a, Exponent::Infinity(), 4).value, 2.0, 1e-12);
}

TEST(GridHpTest, RefinementAndPolish) {
  Rng rng(5);
  const Tensor a = testing::RandomSymmetric(3, 3, rng);
  const Exponent p = Exponent::FromDouble(4);
  double prev = -INFINITY;
  for (int steps : {2, 4, 8}) {
    const OracleResult o = GridHp(a, p, steps);
    EXPECT_GE(o.value, prev - 1e-12);
    prev = o.value;
    const OracleResult pol = PolishHp(a, p, o);
    EXPECT_GE(pol.value, o.value);
    EXPECT_LE(LpNorm(pol.argmax[0], p), 1.0 + 1e-12);
    EXPECT_NEAR(EvalPoly(a, pol.argmax[0]), pol.value, 1e-12);
  }
}

TEST(GridHpTest, NonCubicRejected) {
  EXPECT_THROW(GridHp(Tensor({2, 3}, std::vector<double>(6, 0.0)),
                      Exponent::Infinity(), 4),
               Error);
}

TEST(FnCheckTest, TwoThreeTwo) {
  const FnCheckResult r = FnCheck(2, 3, 2.0, 300);
  EXPECT_NEAR(r.formula, 3.0, 1e-12);
  EXPECT_NEAR(r.balanced_value, 3.0, 1e-12);
  EXPECT_LE(r.grid_max, r.formula + 1e-3);
  EXPECT_NEAR(r.grid_max, 3.0, 1e-3);
}

TEST(FnCheckTest, DegenerateLineAtPTwo) {
  const FnCheckResult r = FnCheck(2, 2, 2.0, 100);
  EXPECT_NEAR(r.formula, 2.0, 1e-12);
  EXPECT_NEAR(r.grid_max, 2.0, 1e-9);
  // Any point on x_1 + x_2 = 2 is optimal.
  EXPECT_NEAR(FnValue({0.5, 1.5}, 2, 2.0), 2.0, 1e-12);
  EXPECT_NEAR(FnValue({1.9, 0.1}, 2, 2.0), 2.0, 1e-12);
}

TEST(FnCheckTest, ThreeFourThree) {
  const FnCheckResult r = FnCheck(3, 4, 3.0, 200);
  const double formula =
      std::pow(4.0, 1.0) * std::pow(3.0, 2.0 / 3.0) * std::pow(2.0 / 3.0, 2.0 / 3.0);
  EXPECT_NEAR(r.formula, formula, 1e-12);
  EXPECT_LE(r.grid_max, r.formula + 1e-3);
}

TEST(FnCheckTest, Validation) {
  EXPECT_THROW(FnCheck(1, 3, 2.0, 10), Error);
  EXPECT_THROW(FnCheck(4, 3, 2.0, 10), Error);
  EXPECT_THROW(FnCheck(2, 3, 1.5, 10), Error);
}

TEST(SymEquivalenceTest, IdentityAtInfinity) {
  const SymEquivalenceResult r =
      SymEquivalenceCheck(Tensor({2, 2}, {1, 0, 0, 1}), Exponent::Infinity(), 8);
  EXPECT_NEAR(r.ml_side, 4.0, 1e-12);
  EXPECT_NEAR(r.sym_side, 4.0, 1e-12);
  EXPECT_TRUE(r.passed);
}

TEST(SymEquivalenceTest, ScalarAtFour) {
  const SymEquivalenceResult r =
      SymEquivalenceCheck(Tensor({1, 1}, {1.0}), Exponent::FromDouble(4), 64);
  EXPECT_NEAR(r.ml_side, 2.0, 1e-12);
  EXPECT_LT(RelErr(r.sym_side, r.ml_side), 0.01);
  EXPECT_TRUE(r.passed);
}

TEST(SymEquivalenceTest, ZeroPadding) {
  const SymEquivalenceResult r = SymEquivalenceCheck(
      Tensor({2, 2}, {1, 0, 0, 0}), Exponent::FromDouble(3), 32);
  EXPECT_TRUE(r.passed);
  EXPECT_NEAR(r.ml_side, 2.0, 1e-12);
}

TEST(OracleMethodTest, Names) {
  EXPECT_EQ(OracleMethodName(OracleMethod::kVertexEnum), "vertex_enum");
  EXPECT_EQ(OracleMethodName(OracleMethod::kGrid), "grid");
  EXPECT_EQ(OracleMethodName(OracleMethod::kClosedForm), "closed_form");
}

}  // namespace
}  // namespace lpopt
