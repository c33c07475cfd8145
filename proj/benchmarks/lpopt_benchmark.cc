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

#include <vector>

#include <benchmark/benchmark.h>

#include "lpopt/mlopt.h"
#include "lpopt/pqnorm.h"
#include "lpopt/symmetry.h"
#include "lpopt/tensor.h"

namespace lpopt {
namespace {

Tensor RandomCube(int n, int d, Rng& rng) {
  std::vector<int> dims(d, n);
  int64_t size = 1;
  for (int k = 0; k < d; ++k) size *= n;
  std::vector<double> e(size);
  for (auto& v : e) v = rng.Normal();
  return Tensor(dims, std::move(e));
}

void BM_EvalMultilinear(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Rng rng(1);
  const Tensor a = RandomCube(n, 3, rng);
  std::vector<Eigen::VectorXd> xs(3, Eigen::VectorXd::Ones(n));
  for (auto _ : state) benchmark::DoNotOptimize(EvalMultilinear(a, xs));
  state.SetItemsProcessed(state.iterations() * a.size());
}
BENCHMARK(BM_EvalMultilinear)->Arg(8)->Arg(32)->Arg(96);

void BM_Symmetrize(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Rng rng(2);
  const Tensor a = RandomCube(n, 3, rng);
  for (auto _ : state) benchmark::DoNotOptimize(Symmetrize(a));
}
BENCHMARK(BM_Symmetrize)->Arg(4)->Arg(12);

void BM_SolveVecp(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Exponent p = state.range(1) ? Exponent::FromDouble(state.range(1))
                                    : Exponent::Infinity();
  Rng rng(3);
  Eigen::MatrixXd b(n, n);
  for (int i = 0; i < b.size(); ++i) b.data()[i] = rng.Normal();
  for (auto _ : state) benchmark::DoNotOptimize(SolveVecp(b, p).value);
}
BENCHMARK(BM_SolveVecp)
    ->Args({4, 0})
    ->Args({4, 3})
    ->Args({6, 4})
    ->Unit(benchmark::kMillisecond);

void BM_SolveMl(benchmark::State& state) {
  Rng rng(4);
  SolverConfig cfg;
  cfg.max_samples = static_cast<int>(state.range(0));
  const MlInstance inst{RandomCube(3, 3, rng), Exponent::Infinity(), cfg};
  for (auto _ : state) benchmark::DoNotOptimize(SolveMl(inst, Rng(0)).value);
}
BENCHMARK(BM_SolveMl)->Arg(8)->Arg(64)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace lpopt

BENCHMARK_MAIN();
