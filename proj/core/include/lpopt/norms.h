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


#ifndef LPOPT_NORMS_H_
#define LPOPT_NORMS_H_

#include <Eigen/Core>

#include "lpopt/exponent.h"

namespace lpopt {

// ||x||_p for p >= 1, including p = inf. Scaled by max|x_i| internally so
// large p does not overflow.
double LpNorm(const Eigen::Ref<const Eigen::VectorXd>& x, double p);
double LpNorm(const Eigen::Ref<const Eigen::VectorXd>& x, const Exponent& p);

// Returns x / ||x||_p. Throws a degenerate error when x is zero.
Eigen::VectorXd NormalizeLp(const Eigen::Ref<const Eigen::VectorXd>& x,
                            const Exponent& p);

}  // namespace lpopt

#endif  // LPOPT_NORMS_H_
