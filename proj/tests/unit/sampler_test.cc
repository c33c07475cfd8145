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
#include "lpopt/sampler.h"

namespace lpopt {
namespace {

struct Moments {
  double mean = 0.0;
  double se = 0.0;
};

template <typename F>
Moments Estimate(int draws, F&& draw) {
  double sum = 0.0, sq = 0.0;
  for (int i = 0; i < draws; ++i) {
    const double v = draw();
    sum += v;
    sq += v * v;
  }
  const double mean = sum / draws;
  const double var = (sq - draws * mean * mean) / (draws - 1);
  return {mean, std::sqrt(var / draws)};
}

TEST(RngTest, SameSeedSameSequence) {
  Rng a(77), b(77);
  for (int i = 0; i < 100; ++i) EXPECT_EQ(a.engine()(), b.engine()());
}

TEST(RngTest, StreamsDependOnlyOnSeedAndId) {
  Rng a(5);
  a.Normal();  // consuming the parent must not change its streams
  Rng s1 = a.Stream(3), s2 = Rng(5).Stream(3), s3 = Rng(5).Stream(4);
  const uint64_t v1 = s1.engine()(), v2 = s2.engine()(), v3 = s3.engine()();
  EXPECT_EQ(v1, v2);
  EXPECT_NE(v1, v3);
}

TEST(RademacherTest, SingleCoordinate) {
  Rng rng(1);
  for (int i = 0; i < 20; ++i) {
    const double v = SampleRademacher(1, rng)[0];
    EXPECT_TRUE(v == 1.0 || v == -1.0);
  }
}

TEST(RademacherTest, CoordinateMeans) {
  Rng rng(2);
  const int n = 4, draws = 100000;
  Eigen::VectorXd sum = Eigen::VectorXd::Zero(n);
  for (int i = 0; i < draws; ++i) sum += SampleRademacher(n, rng);
  for (int k = 0; k < n; ++k) {
    EXPECT_LE(std::abs(sum[k] / draws), 0.02);
  }
}

TEST(RademacherTest, Deterministic) {
  Rng a(3), b(3);
  EXPECT_EQ(SampleRademacher(16, a), SampleRademacher(16, b));
}

TEST(PGaussTest, PthMomentIsOneOverP) {
  for (double p : {2.5, 3.0, 4.0}) {
    Rng rng(4);
    const Moments m = Estimate(100000, [&] {
      return std::pow(std::abs(SamplePGauss(1, p, rng).xi[0]), p);
    });
    EXPECT_LE(std::abs(m.mean - 1.0 / p), 3 * m.se) << "p=" << p;
  }
}

TEST(PGaussTest, MeanIsZero) {
  Rng rng(5);
  const Moments m =
      Estimate(100000, [&] { return SamplePGauss(1, 3.0, rng).xi[0]; });
  EXPECT_LE(std::abs(m.mean), 3 * m.se);
}

TEST(PGaussTest, NormalizedHasUnitNorm) {
  Rng rng(6);
  for (double p : {2.5, 3.0, 7.0}) {
    for (int rep = 0; rep < 20; ++rep) {
      const PGaussSample s = SamplePGauss(5, p, rng);
      EXPECT_NEAR(LpNorm(s.xi_normalized, p), 1.0, 1e-12);
      EXPECT_LT((s.xi_normalized * LpNorm(s.xi, p) - s.xi).norm(), 1e-12);
    }
  }
}

TEST(PGaussTest, RejectsInfiniteP) {
  Rng rng(0);
  EXPECT_THROW(SamplePGauss(3, INFINITY, rng), Error);
}

TEST(SampleCountTest, AmplifiedFiniteP) {
  // 2 ln2 * 144 * 16^{1/40} = 213.95...
  EXPECT_NEAR(SampleCountRaw(16, Exponent::FromDouble(4), true), 213.954, 1e-3);
  EXPECT_EQ(SampleCount(16, Exponent::FromDouble(4), true, 1000), 214);
}

TEST(SampleCountTest, DimensionOne) {
  const double ln2 = std::log(2.0);
  EXPECT_DOUBLE_EQ(SampleCountRaw(1, Exponent::Infinity(), false), ln2 * 72);
  EXPECT_DOUBLE_EQ(SampleCountRaw(1, Exponent::FromDouble(3), false), ln2 * 144);
  EXPECT_EQ(SampleCount(1, Exponent::Infinity(), false, 1000), 50);
  EXPECT_EQ(SampleCount(1, Exponent::Infinity(), true, 1000), 100);
  EXPECT_EQ(SampleCount(1, Exponent::FromDouble(3), false, 1000), 100);
}

TEST(SampleCountTest, MonotoneInN) {
  for (const Exponent& p : {Exponent::Infinity(), Exponent::FromDouble(3)}) {
    double prev = 0.0;
    for (int n = 1; n <= 4096; n *= 2) {
      const double raw = SampleCountRaw(n, p, true);
      EXPECT_GT(raw, prev);
      prev = raw;
    }
  }
}

TEST(SampleCountTest, Cap) {
  EXPECT_EQ(SampleCount(16, Exponent::FromDouble(4), true, 100), 100);
  EXPECT_THROW(SampleCount(16, Exponent::FromDouble(4), true, 0), Error);
}

TEST(SampleCandidateTest, BranchByExponent) {
  Rng rng(7);
  const Eigen::VectorXd r = SampleCandidate(6, Exponent::Infinity(), rng);
  EXPECT_EQ(r.cwiseAbs(), Eigen::VectorXd::Ones(6));
  const Exponent p = Exponent::FromDouble(3);
  EXPECT_NEAR(LpNorm(SampleCandidate(6, p, rng), p), 1.0, 1e-12);
}

// Fraction of draws with w'zeta >= sqrt(delta log n / n) ||w||_dual must
// exceed c / n^e.
TEST(SuccessProbabilityTest, Rademacher) {
  const int n = 50, draws = 100000;
  Rng rng(8);
  Eigen::VectorXd w(n);
  for (int i = 0; i < n; ++i) w[i] = rng.Normal();
  const double thr =
      std::sqrt(KNConstants::kDelta0 * std::log(n) / n) * w.lpNorm<1>();
  const Moments m = Estimate(draws, [&] {
    return w.dot(SampleRademacher(n, rng)) >= thr ? 1.0 : 0.0;
  });
  const double bound = KNConstants::kC0 / std::pow(n, KNConstants::kDelta0);
  EXPECT_GE(m.mean + 3 * m.se, bound);
}

TEST(SuccessProbabilityTest, PGaussian) {
  const int n = 50, draws = 100000;
  const double p = 4.0, q = p / (p - 1);
  Rng rng(9);
  Eigen::VectorXd w(n);
  for (int i = 0; i < n; ++i) w[i] = rng.Normal();
  const double thr =
      std::sqrt(KNConstants::kDelta1 * std::log(n) / n) * LpNorm(w, q);
  const Moments m = Estimate(draws, [&] {
    return w.dot(SamplePGauss(n, p, rng).xi_normalized) >= thr ? 1.0 : 0.0;
  });
  const double bound = KNConstants::kC1 / std::pow(n, KNConstants::kC2);
  EXPECT_GE(m.mean + 3 * m.se, bound);
}

}  // namespace
}  // namespace lpopt
