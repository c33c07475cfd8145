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

#include "lpopt/mlopt.h"

#include <atomic>
#include <exception>
#include <string>
#include <thread>

#include "lpopt/error.h"
#include "lpopt/pqnorm.h"
#include "lpopt/sampler.h"

namespace lpopt {
namespace {

void FlipIfNegative(MlCertificate& cert) {
  if (cert.value < 0.0) {
    cert.xs[0] = -cert.xs[0];
    cert.value = -cert.value;
    cert.sign_flipped = true;
  }
}

MlCertificate Recurse(const Tensor& a, const Exponent& p,
                      const SolverConfig& cfg, const Rng& rng, int threads);

MlCertificate SolveCandidate(const Tensor& a, const Exponent& p,
                             const SolverConfig& cfg, const Rng& base,
                             int index) {
  Rng stream = base.Stream(index);
  const Eigen::VectorXd xi = SampleCandidate(a.dim(0), p, stream);
  const Tensor sub = ContractFirst(a, xi);
  MlCertificate cert;
  if (sub.IsZero()) {
    cert.xs.push_back(xi);
    for (int k = 0; k < sub.order(); ++k) {
      cert.xs.push_back(Eigen::VectorXd::Zero(sub.dim(k)));
    }
    return cert;
  }
  MlCertificate child = Recurse(sub, p, cfg, stream, 1);
  cert.xs.push_back(xi);
  for (auto& x : child.xs) cert.xs.push_back(std::move(x));
  cert.value = child.value;
  cert.relax_value = child.relax_value;
  cert.sample_cap_hit = child.sample_cap_hit;
  return cert;
}

MlCertificate Recurse(const Tensor& a, const Exponent& p,
                      const SolverConfig& cfg, const Rng& rng, int threads) {
  if (a.order() == 2) return SolveMlD2(a.ToMatrix(), p, cfg, rng);

  const int n1 = a.dim(0);
  const int count = SampleCount(n1, p, cfg.amplified, cfg.max_samples);
  std::vector<MlCertificate> cands(count);
  if (threads <= 1 || count == 1) {
    for (int i = 0; i < count; ++i) cands[i] = SolveCandidate(a, p, cfg, rng, i);
  } else {
    std::atomic<int> next{0};
    std::vector<std::exception_ptr> errors(count);
    std::vector<std::thread> pool;
    for (int w = 0; w < std::min(threads, count); ++w) {
      pool.emplace_back([&] {
        for (int i = next++; i < count; i = next++) {
          try {
            cands[i] = SolveCandidate(a, p, cfg, rng, i);
          } catch (...) {
            errors[i] = std::current_exception();
          }
        }
      });
    }
    for (auto& t : pool) t.join();
    for (auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
  }

  int best = 0;
  double relax = cands[0].relax_value;
  bool cap_hit = SampleCountRaw(n1, p, cfg.amplified) > cfg.max_samples;
  for (int i = 0; i < count; ++i) {
    if (cands[i].value > cands[best].value) best = i;
    relax = std::max(relax, cands[i].relax_value);
    cap_hit = cap_hit || cands[i].sample_cap_hit;
  }
  MlCertificate cert = std::move(cands[best]);
  cert.relax_value = relax;
  cert.sample_cap_hit = cap_hit;
  cert.trials_used = count;
  return cert;
}

}  // namespace

void ValidateMlInstance(const MlInstance& inst) {
  if (inst.tensor.order() < 2) {
    throw DomainError("multilinear problems need order >= 2");
  }
  if (!inst.p.is_infinite() && !(inst.p.value() > 2.0)) {
    throw DomainError("p must lie in (2, inf], got " + inst.p.ToString());
  }
  if (inst.tensor.IsZero()) throw DegenerateError("tensor is zero");
  if (inst.cfg.trials < 1) throw DomainError("trials must be at least 1");
  if (inst.cfg.threads < 1) throw DomainError("threads must be at least 1");
}

MlCertificate SolveMlD2(const Eigen::MatrixXd& b, const Exponent& p,
                        const SolverConfig& cfg, const Rng& rng) {
  const PqNormEstimate est = PqNormLb(b, p, cfg, rng);
  MlCertificate cert;
  cert.xs = {est.rounded.y, est.rounded.z};
  cert.value = est.rounded.y.dot(b * est.rounded.z);
  cert.relax_value = est.relaxation.value;
  cert.trials_used = est.rounded.trials_used;
  cert.seed = rng.seed();
  FlipIfNegative(cert);
  return cert;
}

MlCertificate SolveMl(const MlInstance& inst, const Rng& rng) {
  ValidateMlInstance(inst);
  MlCertificate cert = Recurse(inst.tensor, inst.p, inst.cfg, rng,
                               inst.cfg.threads);
  cert.value = EvalMultilinear(inst.tensor, cert.xs);
  FlipIfNegative(cert);
  cert.seed = rng.seed();
  return cert;
}

MlInstance RelaxToMl(const HpInstance& hp) {
  return MlInstance{hp.tensor.tensor(), hp.p, hp.cfg};
}

}  // namespace lpopt
