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


#ifndef LPOPT_ORACLE_H_
#define LPOPT_ORACLE_H_

#include <string_view>
#include <vector>

#include <Eigen/Core>

#include "lpopt/exponent.h"
#include "lpopt/tensor.h"

namespace lpopt {

// Brute-force baselines. None of these call into the solvers.

enum class OracleMethod { kVertexEnum, kGrid, kClosedForm };

std::string_view OracleMethodName(OracleMethod m);

struct OracleResult {
  double value = 0.0;
  std::vector<Eigen::VectorXd> argmax;
  OracleMethod method = OracleMethod::kVertexEnum;
  double resolution = 0.0;  // grid step, 0 when exact
};

inline constexpr double kGridBudget = 1e8;

// Exact max of F_A over the product of unit inf-balls. Enumerates sign
// vectors for all but the last slot; gated at prod 2^{n_i} <= 2^24.
OracleResult ExactMlLinf(const Tensor& a);

// Points of the L_p unit sphere in R^n obtained by radially projecting the
// boundary of the cube grid with levels -1 + 2k/steps. Doubling steps refines
// the set; steps = 1 gives the cube vertices.
std::vector<Eigen::VectorXd> SphereGrid(int n, int steps, const Exponent& p);

// Lower bound on max F_A over unit L_p balls: grids slots 1..d-1 and solves
// the last slot by Holder duality.
OracleResult GridMl(const Tensor& a, const Exponent& p, int steps);

// Block-coordinate ascent from `start`: each slot in turn is replaced by its
// Holder-dual best response. Never returns a smaller value than `start`.
OracleResult PolishMl(const Tensor& a, const Exponent& p,
                      const OracleResult& start, int max_sweeps = 1000);

// Lower bound on max f_A over the unit L_p ball (A super-symmetric).
OracleResult GridHp(const Tensor& a, const Exponent& p, int steps);

// Local pattern search on the sphere around start.argmax[0], halving the
// stencil each round. Never returns a smaller value than `start`.
OracleResult PolishHp(const Tensor& a, const Exponent& p,
                      const OracleResult& start, int rounds = 60);

struct FnCheckResult {
  double grid_max = 0.0;
  double formula = 0.0;
  double balanced_value = 0.0;  // f_n(d/n, ..., d/n)
  std::vector<double> argmax;
};

// f_n(x) = sum_i x_i^{1/p} prod_{j != i} (d - x_j)^{1/p} on [0, d]^n.
double FnValue(const std::vector<double>& x, int d, double p);
FnCheckResult FnCheck(int n, int d, double p, int steps);

struct SymEquivalenceResult {
  double ml_side = 0.0;   // d! max F_A over unit balls
  double sym_side = 0.0;  // max F_sym(A) over radius d^{1/p} balls
  bool passed = false;
};

// Compares both sides by vertex enumeration (p = inf) or grids; passes when
// they agree within `rel_tol`.
SymEquivalenceResult SymEquivalenceCheck(const Tensor& a, const Exponent& p,
                                         int steps, double rel_tol = 0.02);

}  // namespace lpopt

#endif  // LPOPT_ORACLE_H_
