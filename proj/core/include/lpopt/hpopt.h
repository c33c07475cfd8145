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


#ifndef LPOPT_HPOPT_H_
#define LPOPT_HPOPT_H_

#include <cstdint>
#include <vector>

#include <Eigen/Core>

#include "lpopt/exponent.h"
#include "lpopt/mlopt.h"
#include "lpopt/rng.h"
#include "lpopt/tensor.h"

namespace lpopt {

enum class Parity { kOdd, kEven };

struct Polarized {
  Eigen::VectorXd x_hat;
  double value = 0.0;
  std::vector<int> beta;
};

struct HpCertificate {
  Eigen::VectorXd x_hat;
  double value = 0.0;
  double ml_value = 0.0;
  Parity parity = Parity::kOdd;
  uint64_t seed = 0;
  std::vector<int> beta;
  MlCertificate ml;
};

// Odd d: over all sign vectors beta, s = sum_j (prod_{i != j} beta_i) x^j.
// Returns the s/||s||_p with the largest f_A. Guarantees
// value >= d! d^{-d} F_A(xs) when the x^j lie in the unit ball.
Polarized PolarizeOdd(const SymmetricTensor& a,
                      const std::vector<Eigen::VectorXd>& xs,
                      const Exponent& p);

// Even d: over sign vectors with prod beta_i = 1, x_hat = (1/d) sum beta_j x^j.
Polarized PolarizeEven(const SymmetricTensor& a,
                       const std::vector<Eigen::VectorXd>& xs,
                       const Exponent& p);

// RelaxToMl -> SolveMl -> polarization. For even d, a negative polarized
// value is replaced by the best of the multilinear vectors and the origin
// (beta is then empty).
HpCertificate SolveHp(const HpInstance& inst, const Rng& rng);

}  // namespace lpopt

#endif  // LPOPT_HPOPT_H_
