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


#ifndef LPOPT_MLOPT_H_
#define LPOPT_MLOPT_H_

#include <cstdint>
#include <vector>

#include <Eigen/Core>

#include "lpopt/config.h"
#include "lpopt/exponent.h"
#include "lpopt/rng.h"
#include "lpopt/tensor.h"

namespace lpopt {

// max F_A(x^1, ..., x^d) subject to ||x^i||_p <= 1.
struct MlInstance {
  Tensor tensor;
  Exponent p;
  SolverConfig cfg;
};

// max f_A(x) subject to ||x||_p <= 1, A super-symmetric.
struct HpInstance {
  SymmetricTensor tensor;
  Exponent p;
  SolverConfig cfg;
};

struct MlCertificate {
  std::vector<Eigen::VectorXd> xs;
  double value = 0.0;
  uint64_t seed = 0;
  int trials_used = 0;  // slot-1 candidates at the top level (rounding trials for d = 2)
  double relax_value = 0.0;
  bool sample_cap_hit = false;
  bool sign_flipped = false;
};

// Throws unless the tensor is nonzero with order >= 2 and p > 2.
void ValidateMlInstance(const MlInstance& inst);

MlCertificate SolveMlD2(const Eigen::MatrixXd& b, const Exponent& p,
                        const SolverConfig& cfg, const Rng& rng);

// Randomized recursion: sample candidates for slot 1, solve each contraction
// one order lower, keep the best. Candidate i uses rng.Stream(i).
MlCertificate SolveMl(const MlInstance& inst, const Rng& rng);

MlInstance RelaxToMl(const HpInstance& hp);

}  // namespace lpopt

#endif  // LPOPT_MLOPT_H_
