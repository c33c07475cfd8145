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

#include "lpopt/hpopt.h"

#include <bit>
#include <cmath>
#include <limits>
#include <string>

#include "lpopt/error.h"
#include "lpopt/norms.h"

namespace lpopt {
namespace {

constexpr int kMaxPolarizationOrder = 20;

void CheckInputs(const SymmetricTensor& a,
                 const std::vector<Eigen::VectorXd>& xs) {
  const int d = a.order();
  if (d > kMaxPolarizationOrder) {
    throw ResourceError("polarization enumerates 2^d signs; d = " +
                        std::to_string(d) + " is above the limit");
  }
  if (static_cast<int>(xs.size()) != d) {
    throw ShapeError("polarization needs one vector per slot");
  }
  for (const auto& x : xs) {
    if (x.size() != a.n()) throw ShapeError("vector length mismatch");
  }
}

double Factorial(int d) {
  double f = 1.0;
  for (int i = 2; i <= d; ++i) f *= i;
  return f;
}

}  // namespace

Polarized PolarizeOdd(const SymmetricTensor& a,
                      const std::vector<Eigen::VectorXd>& xs,
                      const Exponent& p) {
  const int d = a.order();
  if (d % 2 == 0 || d < 3) throw DomainError("PolarizeOdd needs odd d >= 3");
  CheckInputs(a, xs);

  Polarized best;
  best.value = -std::numeric_limits<double>::infinity();
  for (uint32_t mask = 0; mask < (1u << d); ++mask) {
    std::vector<int> beta(d);
    int prod = 1;
    for (int j = 0; j < d; ++j) {
      beta[j] = (mask >> j) & 1u ? -1 : 1;
      prod *= beta[j];
    }
    // prod_{i != j} beta_i = prod * beta_j.
    Eigen::VectorXd s = Eigen::VectorXd::Zero(a.n());
    for (int j = 0; j < d; ++j) s += (prod * beta[j]) * xs[j];
    const double norm = LpNorm(s, p);
    if (norm == 0.0) continue;
    const Eigen::VectorXd x = s / norm;
    const double v = EvalPoly(a, x);
    if (v > best.value) {
      best.value = v;
      best.x_hat = x;
      best.beta = beta;
    }
  }
  if (!best.x_hat.size()) {
    // Every signed sum vanished; fall back to the best single input.
    for (const auto& xj : xs) {
      const double norm = LpNorm(xj, p);
      if (norm == 0.0) continue;
      const Eigen::VectorXd x = xj / norm;
      const double v = EvalPoly(a, x);
      if (v > best.value) {
        best.value = v;
        best.x_hat = x;
      }
    }
    best.beta.clear();
  }
  if (!best.x_hat.size()) {
    best.x_hat = Eigen::VectorXd::Zero(a.n());
    best.value = 0.0;
  }
  return best;
}

Polarized PolarizeEven(const SymmetricTensor& a,
                       const std::vector<Eigen::VectorXd>& xs,
                       const Exponent& p) {
  (void)p;  // x_hat is feasible by the triangle inequality for every p.
  const int d = a.order();
  if (d % 2 != 0 || d < 2) throw DomainError("PolarizeEven needs even d >= 2");
  CheckInputs(a, xs);

  Polarized best;
  best.value = -std::numeric_limits<double>::infinity();
  for (uint32_t mask = 0; mask < (1u << d); ++mask) {
    if (std::popcount(mask) % 2 != 0) continue;  // need prod beta_i = 1
    std::vector<int> beta(d);
    Eigen::VectorXd x = Eigen::VectorXd::Zero(a.n());
    for (int j = 0; j < d; ++j) {
      beta[j] = (mask >> j) & 1u ? -1 : 1;
      x += beta[j] * xs[j];
    }
    x /= d;
    const double v = EvalPoly(a, x);
    if (v > best.value) {
      best.value = v;
      best.x_hat = x;
      best.beta = beta;
    }
  }
  return best;
}

HpCertificate SolveHp(const HpInstance& inst, const Rng& rng) {
  const MlInstance ml_inst = RelaxToMl(inst);
  HpCertificate cert;
  cert.ml = SolveMl(ml_inst, rng);
  cert.ml_value = cert.ml.value;
  cert.seed = rng.seed();
  const int d = inst.tensor.order();
  cert.parity = d % 2 == 1 ? Parity::kOdd : Parity::kEven;
  const Polarized pol = cert.parity == Parity::kOdd
                            ? PolarizeOdd(inst.tensor, cert.ml.xs, inst.p)
                            : PolarizeEven(inst.tensor, cert.ml.xs, inst.p);
  cert.x_hat = pol.x_hat;
  cert.value = pol.value;
  cert.beta = pol.beta;
  if (cert.parity == Parity::kEven && cert.value < 0.0) {
    // The even construction can land where f < 0. The inputs themselves and
    // the origin are feasible too; keep the best of them.
    for (const auto& x : cert.ml.xs) {
      const double v = EvalPoly(inst.tensor, x);
      if (v > cert.value) {
        cert.value = v;
        cert.x_hat = x;
        cert.beta.clear();
      }
    }
    if (cert.value < 0.0) {
      cert.value = 0.0;
      cert.x_hat = Eigen::VectorXd::Zero(inst.tensor.n());
      cert.beta.clear();
    }
  }
  if (cert.parity == Parity::kOdd) {
    const double floor = Factorial(d) * std::pow(d, -d) * cert.ml_value;
    if (cert.value < floor - 1e-9 * (1.0 + std::abs(cert.ml_value))) {
      throw InternalError("odd-degree recovery bound violated: " +
                          std::to_string(cert.value) + " < " +
                          std::to_string(floor));
    }
  }
  return cert;
}

}  // namespace lpopt
