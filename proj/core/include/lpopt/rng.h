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


#ifndef LPOPT_RNG_H_
#define LPOPT_RNG_H_

#include <cstdint>
#include <random>

namespace lpopt {

// Seeded 64-bit generator. Independent child streams are derived from
// (seed, stream id) so parallel work stays reproducible.
class Rng {
 public:
  explicit Rng(uint64_t seed = 0);

  uint64_t seed() const { return seed_; }

  // A fresh generator whose state depends only on seed() and `id`.
  Rng Stream(uint64_t id) const;

  std::mt19937_64& engine() { return engine_; }

  double Normal();
  double Uniform();  // [0, 1)
  int Sign();        // -1 or +1 with probability 1/2

 private:
  uint64_t seed_;
  std::mt19937_64 engine_;
};

// splitmix64 finalizer.
uint64_t MixSeed(uint64_t x);

}  // namespace lpopt

#endif  // LPOPT_RNG_H_
