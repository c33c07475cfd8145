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


#ifndef LPOPT_SYMMETRY_H_
#define LPOPT_SYMMETRY_H_

#include <vector>

#include <Eigen/Core>

#include "lpopt/config.h"
#include "lpopt/exponent.h"
#include "lpopt/tensor.h"

namespace lpopt {

// Consecutive index blocks of lengths n_1, ..., n_d inside {0, ..., N-1}.
struct BlockPartition {
  std::vector<int> dims;
  std::vector<int> offsets;
  int total = 0;

  static BlockPartition FromDims(const std::vector<int>& dims);
};

// result[i_{pi[0]}, ..., i_{pi[d-1]}] = A[i_0, ..., i_{d-1}]; `pi` is a
// 0-based permutation.
Tensor PiTranspose(const Tensor& a, const std::vector<int>& pi);

// Cubical tensor of side N = sum n_j whose block (c_1, ..., c_d) is the
// c-transpose of A when c is a permutation and zero otherwise.
Tensor Symmetrize(const Tensor& a, int64_t max_entries = kDefaultMaxEntries);

Eigen::VectorXd Stack(const std::vector<Eigen::VectorXd>& xs);
std::vector<Eigen::VectorXd> Split(const Eigen::VectorXd& z,
                                   const BlockPartition& partition);

// Rescales the blocks of (z^1, ..., z^d) to unit p-norm, one block at a time
// (largest deviation first) while keeping sum ||z^i||_p^p = d. The input is
// first scaled to that total mass. Never decreases F_A when F_A > 0.
std::vector<Eigen::VectorXd> RebalanceBlocks(const Tensor& a,
                                             std::vector<Eigen::VectorXd> zs,
                                             const Exponent& p);

// Order-d tensor with dims (1, ..., 1, m, n) and a_{1..1,i,j} = b_ij.
Tensor EmbedMatrix(const Eigen::MatrixXd& b, int d);

}  // namespace lpopt

#endif  // LPOPT_SYMMETRY_H_
