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


#ifndef LPOPT_CONFIG_H_
#define LPOPT_CONFIG_H_

#include <cstdint>

namespace lpopt {

enum class RoundingStrategy { kHyperplane, kKrivine };

inline constexpr int64_t kDefaultMaxEntries = 10'000'000;

struct SolverConfig {
  double tol = 1e-6;  // relaxation solver tolerance
  int max_iter = 5000;
  int trials = 100;  // rounding trials per bilinear subproblem
  RoundingStrategy strategy = RoundingStrategy::kKrivine;
  int max_samples = 256;  // cap on slot-1 candidates per recursion level
  bool amplified = true;
  uint64_t seed = 0;
  int threads = 1;
  int64_t max_entries = kDefaultMaxEntries;
};

}  // namespace lpopt

#endif  // LPOPT_CONFIG_H_
