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

#include "lpopt/norms.h"

#include <cmath>

#include "lpopt/error.h"

namespace lpopt {

double LpNorm(const Eigen::Ref<const Eigen::VectorXd>& x, double p) {
  if (x.size() == 0) return 0.0;
  const double m = x.cwiseAbs().maxCoeff();
  if (std::isinf(p) || m == 0.0) return m;
  if (p == 1.0) return x.cwiseAbs().sum();
  if (p == 2.0) return x.norm();
  double s = 0.0;
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    s += std::pow(std::abs(x[i]) / m, p);
  }
  return m * std::pow(s, 1.0 / p);
}

double LpNorm(const Eigen::Ref<const Eigen::VectorXd>& x, const Exponent& p) {
  return LpNorm(x, p.value());
}

Eigen::VectorXd NormalizeLp(const Eigen::Ref<const Eigen::VectorXd>& x,
                            const Exponent& p) {
  const double norm = LpNorm(x, p);
  if (norm == 0.0) throw DegenerateError("cannot normalize a zero vector");
  return x / norm;
}

}  // namespace lpopt
