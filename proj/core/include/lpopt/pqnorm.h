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


#ifndef LPOPT_PQNORM_H_
#define LPOPT_PQNORM_H_

#include <vector>

#include <Eigen/Core>

#include "lpopt/config.h"
#include "lpopt/error.h"
#include "lpopt/exponent.h"
#include "lpopt/rng.h"

namespace lpopt {

// Factorized feasible point of the vector relaxation of max y'Bz over two
// L_p balls. Column i of u_dirs is the unit direction attached to row i of B.
struct GramSolution {
  Eigen::MatrixXd u_dirs;  // r x m
  Eigen::MatrixXd v_dirs;  // r x n
  Eigen::VectorXd u_lens;
  Eigen::VectorXd v_lens;
  double value = 0.0;
  int iterations = 0;
  double gap = 0.0;  // final suboptimality estimate
};

struct RoundedPair {
  Eigen::VectorXd y;
  Eigen::VectorXd z;
  double value = 0.0;
  int trials_used = 0;
};

struct PqNormEstimate {
  RoundedPair rounded;
  GramSolution relaxation;
};

// Thrown when SolveVecp runs out of iterations; carries the best feasible
// iterate found.
class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& msg, GramSolution best)
      : Error(ErrorCode::kConvergence, msg), best_(std::move(best)) {}
  const GramSolution& best() const { return best_; }

 private:
  GramSolution best_;
};

// Value of sum_ij B_ij u_lens_i v_lens_j <u_i, v_j>.
double GramValue(const Eigen::MatrixXd& b, const GramSolution& g);

// Maximizes sum_ij B_ij X_{i,m+j} over PSD X whose diagonal blocks satisfy
// sum_i X_ii^{p/2} <= 1 (max_i X_ii <= 1 when p = inf), by projected gradient
// ascent with a Dykstra projection.
GramSolution SolveVecp(const Eigen::MatrixXd& b, const Exponent& p,
                       double tol = 1e-6, int max_iter = 5000);

// Best-of-`trials` sign rounding of g. Trial t uses rng.Stream(t); ties keep
// the earliest trial.
RoundedPair RoundGram(const Eigen::MatrixXd& b, const GramSolution& g,
                      RoundingStrategy strategy, int trials, const Rng& rng);

// Value of every single rounding trial, in trial order.
std::vector<double> RoundingTrialValues(const Eigen::MatrixXd& b,
                                        const GramSolution& g,
                                        RoundingStrategy strategy, int trials,
                                        const Rng& rng);

// Unit L_p vector x (p = q / (q - 1)) with x'y = ||y||_q. q = 1 gives the
// sign vector.
Eigen::VectorXd HolderDual(const Eigen::VectorXd& y, double q);
// Same, parametrized by p (q = conjugate of p).
Eigen::VectorXd HolderDualOf(const Eigen::VectorXd& y, const Exponent& p);

// SolveVecp followed by RoundGram with cfg.trials and cfg.strategy.
PqNormEstimate PqNormLb(const Eigen::MatrixXd& b, const Exponent& p,
                        const SolverConfig& cfg, const Rng& rng);

// pi / (2 ln(1 + sqrt 2)), the Krivine upper bound on the Grothendieck
// constant.
double KrivineConstant();

}  // namespace lpopt

#endif  // LPOPT_PQNORM_H_
