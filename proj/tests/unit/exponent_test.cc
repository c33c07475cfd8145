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

#include <limits>

#include <gtest/gtest.h>

#include "lpopt/error.h"
#include "lpopt/exponent.h"
#include "lpopt/norms.h"

namespace lpopt {
namespace {

TEST(ExponentTest, ParsesInfinity) {
  const Exponent p = Exponent::Parse("inf");
  EXPECT_TRUE(p.is_infinite());
  EXPECT_EQ(p.conjugate(), 1.0);
  EXPECT_EQ(p.ToString(), "inf");
  EXPECT_TRUE(std::isinf(p.value()));
}

TEST(ExponentTest, ParsesRationalExactly) {
  const Exponent p = Exponent::Parse("7/2");
  EXPECT_FALSE(p.is_infinite());
  EXPECT_EQ(p.ToString(), "7/2");
  EXPECT_DOUBLE_EQ(p.value(), 3.5);
  EXPECT_DOUBLE_EQ(p.conjugate(), 7.0 / 5.0);
}

TEST(ExponentTest, DecimalBecomesRational) {
  EXPECT_EQ(Exponent::Parse("2.5").ToString(), "5/2");
  EXPECT_EQ(Exponent::Parse("3").ToString(), "3");
  EXPECT_EQ(Exponent::Parse(" 4.0 ").ToString(), "4");
  EXPECT_EQ(Exponent::Parse("6/4"), Exponent::Rational(3, 2));
}

TEST(ExponentTest, ConjugateOfThree) {
  EXPECT_DOUBLE_EQ(Exponent::Parse("3").conjugate(), 1.5);
}

TEST(ExponentTest, RejectsMalformedText) {
  for (const char* bad : {"", "abc", "3/", "/2", "1/0", "3x"}) {
    try {
      Exponent::Parse(bad);
      ADD_FAILURE() << "accepted '" << bad << "'";
    } catch (const Error& e) {
      EXPECT_TRUE(e.code() == ErrorCode::kParse || e.code() == ErrorCode::kDomain)
          << bad;
    }
  }
}

TEST(ExponentTest, RejectsBelowOne) {
  EXPECT_THROW(Exponent::Parse("1/2"), Error);
  EXPECT_THROW(Exponent::FromDouble(0.5), Error);
}

TEST(NormsTest, KnownValues) {
  Eigen::VectorXd x(2);
  x << 3, -4;
  EXPECT_DOUBLE_EQ(LpNorm(x, 2.0), 5.0);
  EXPECT_DOUBLE_EQ(LpNorm(x, 1.0), 7.0);
  EXPECT_DOUBLE_EQ(LpNorm(x, Exponent::Infinity()), 4.0);
  EXPECT_NEAR(LpNorm(x, 3.0), std::cbrt(27.0 + 64.0), 1e-14);
}

TEST(NormsTest, LargeExponentDoesNotOverflow) {
  Eigen::VectorXd x = Eigen::VectorXd::Constant(3, 1e200);
  EXPECT_NEAR(LpNorm(x, 50.0) / 1e200, std::pow(3.0, 1.0 / 50.0), 1e-12);
}

TEST(NormsTest, NormalizeZeroThrows) {
  EXPECT_THROW(NormalizeLp(Eigen::VectorXd::Zero(3), Exponent::Infinity()),
               Error);
}

}  // namespace
}  // namespace lpopt
