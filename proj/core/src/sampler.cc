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

#include "lpopt/sampler.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "lpopt/error.h"
#include "lpopt/norms.h"

namespace lpopt {

Eigen::VectorXd SampleRademacher(int n, Rng& rng) {
  if (n < 1) throw DomainError("sample size must be positive");
  Eigen::VectorXd x(n);
  for (int i = 0; i < n; ++i) x[i] = rng.Sign();
  return x;
}

PGaussSample SamplePGauss(int n, double p, Rng& rng) {
  if (n < 1) throw DomainError("sample size must be positive");
  if (!(p > 0.0) || std::isinf(p)) {
    throw DomainError("p-Gaussian sampling needs finite p > 0");
  }
  std::gamma_distribution<double> gamma(1.0 / p, 1.0);
  PGaussSample s;
  s.xi.resize(n);
  for (int i = 0; i < n; ++i) {
    const int sign = rng.Sign();
    s.xi[i] = sign * std::pow(gamma(rng.engine()), 1.0 / p);
  }
  const double norm = LpNorm(s.xi, p);
  // All-zero draws have probability zero; guard anyway.
  s.xi_normalized = norm > 0.0 ? Eigen::VectorXd(s.xi / norm)
                               : Eigen::VectorXd::Unit(n, 0);
  return s;
}

double SampleCountRaw(int n, const Exponent& p, bool amplified) {
  if (n < 1) throw DomainError("dimension must be positive");
  const double factor = (amplified ? 2.0 : 1.0) * std::numbers::ln2;
  if (p.is_infinite()) {
    return factor * std::pow(n, KNConstants::kDelta0) / KNConstants::kC0;
  }
  return factor * std::pow(n, KNConstants::kC2) / KNConstants::kC1;
}

int SampleCount(int n, const Exponent& p, bool amplified, int max_samples) {
  if (max_samples < 1) throw DomainError("max_samples must be positive");
  const double raw = std::ceil(SampleCountRaw(n, p, amplified));
  return static_cast<int>(std::clamp(raw, 1.0, static_cast<double>(max_samples)));
}

Eigen::VectorXd SampleCandidate(int n, const Exponent& p, Rng& rng) {
  if (p.is_infinite()) return SampleRademacher(n, rng);
  return SamplePGauss(n, p.value(), rng).xi_normalized;
}

}  // namespace lpopt
