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


#ifndef LPOPT_SAMPLER_H_
#define LPOPT_SAMPLER_H_

#include <Eigen/Core>

#include "lpopt/exponent.h"
#include "lpopt/rng.h"

namespace lpopt {

// Constants of the Khot-Naor style sampling bounds.
struct KNConstants {
  static constexpr double kDelta0 = 1.0 / 48.0;
  static constexpr double kC0 = 1.0 / 72.0;
  static constexpr double kDelta1 = 3.0 / 6400.0;
  static constexpr double kC1 = 1.0 / 144.0;
  static constexpr double kC2 = 1.0 / 40.0;
  static constexpr int kNBar = 41;
};

Eigen::VectorXd SampleRademacher(int n, Rng& rng);

struct PGaussSample {
  Eigen::VectorXd xi;
  Eigen::VectorXd xi_normalized;  // xi / ||xi||_p
};

// Coordinates i.i.d. with density p exp(-|t|^p) / (2 Gamma(1/p)), drawn as
// sign * Gamma(1/p, 1)^{1/p}.
PGaussSample SamplePGauss(int n, double p, Rng& rng);

// Number of slot-1 candidates before capping:
//   p = inf: ln2 n^{delta0} / c0,  finite p: ln2 n^{c2} / c1,
// doubled when `amplified`.
double SampleCountRaw(int n, const Exponent& p, bool amplified);
// ceil(SampleCountRaw), clamped to [1, max_samples].
int SampleCount(int n, const Exponent& p, bool amplified, int max_samples);

// Draws one slot-1 candidate: Rademacher for p = inf, normalized p-Gaussian
// otherwise.
Eigen::VectorXd SampleCandidate(int n, const Exponent& p, Rng& rng);

}  // namespace lpopt

#endif  // LPOPT_SAMPLER_H_
