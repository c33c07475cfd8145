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

#include "lpopt/symmetry.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "lpopt/error.h"
#include "lpopt/norms.h"

namespace lpopt {
namespace {

void CheckPermutation(const std::vector<int>& pi, int d) {
  if (static_cast<int>(pi.size()) != d) {
    throw DomainError("permutation length " + std::to_string(pi.size()) +
                      " does not match order " + std::to_string(d));
  }
  std::vector<bool> seen(d, false);
  for (int v : pi) {
    if (v < 0 || v >= d || seen[v]) throw DomainError("not a permutation");
    seen[v] = true;
  }
}

// Advances a row-major multi-index; false after the last one.
bool Next(std::vector<int>& idx, const std::vector<int>& dims) {
  for (int k = static_cast<int>(dims.size()) - 1; k >= 0; --k) {
    if (++idx[k] < dims[k]) return true;
    idx[k] = 0;
  }
  return false;
}

}  // namespace

BlockPartition BlockPartition::FromDims(const std::vector<int>& dims) {
  BlockPartition part;
  part.dims = dims;
  for (int n : dims) {
    if (n < 1) throw ShapeError("block sizes must be positive");
    part.offsets.push_back(part.total);
    part.total += n;
  }
  return part;
}

Tensor PiTranspose(const Tensor& a, const std::vector<int>& pi) {
  const int d = a.order();
  CheckPermutation(pi, d);
  std::vector<int> dims(d);
  for (int k = 0; k < d; ++k) dims[k] = a.dim(pi[k]);
  std::vector<double> data(a.size());
  if (d == 0) return a;
  Tensor shape = Tensor::Zeros(dims, a.size());
  std::vector<int> idx(d, 0);
  std::vector<int> ridx(d);
  int64_t off = 0;
  do {
    for (int k = 0; k < d; ++k) ridx[k] = idx[pi[k]];
    data[shape.Offset(ridx)] = a.entries()[off++];
  } while (Next(idx, a.dims()));
  return Tensor(std::move(dims), std::move(data), a.size());
}

Tensor Symmetrize(const Tensor& a, int64_t max_entries) {
  const int d = a.order();
  if (d < 2) throw DomainError("symmetrization needs order >= 2");
  const BlockPartition part = BlockPartition::FromDims(a.dims());
  std::vector<int> dims(d, part.total);
  Tensor shape = Tensor::Zeros(dims, max_entries);
  std::vector<double> data(shape.size(), 0.0);

  std::vector<int> chi(d);
  std::iota(chi.begin(), chi.end(), 0);
  std::vector<int> ridx(d);
  do {
    std::vector<int> idx(d, 0);
    int64_t off = 0;
    do {
      for (int k = 0; k < d; ++k) {
        ridx[k] = part.offsets[chi[k]] + idx[chi[k]];
      }
      data[shape.Offset(ridx)] = a.entries()[off++];
    } while (Next(idx, a.dims()));
  } while (std::next_permutation(chi.begin(), chi.end()));
  return Tensor(std::move(dims), std::move(data), max_entries);
}

Eigen::VectorXd Stack(const std::vector<Eigen::VectorXd>& xs) {
  Eigen::Index total = 0;
  for (const auto& x : xs) total += x.size();
  Eigen::VectorXd z(total);
  Eigen::Index off = 0;
  for (const auto& x : xs) {
    z.segment(off, x.size()) = x;
    off += x.size();
  }
  return z;
}

std::vector<Eigen::VectorXd> Split(const Eigen::VectorXd& z,
                                   const BlockPartition& partition) {
  if (z.size() != partition.total) {
    throw ShapeError("vector length " + std::to_string(z.size()) +
                     " does not match partition size " +
                     std::to_string(partition.total));
  }
  std::vector<Eigen::VectorXd> xs;
  for (size_t j = 0; j < partition.dims.size(); ++j) {
    xs.push_back(z.segment(partition.offsets[j], partition.dims[j]));
  }
  return xs;
}

std::vector<Eigen::VectorXd> RebalanceBlocks(const Tensor& a,
                                             std::vector<Eigen::VectorXd> zs,
                                             const Exponent& p) {
  const int d = a.order();
  if (static_cast<int>(zs.size()) != d) {
    throw ShapeError("expected one block per tensor index");
  }
  for (int i = 0; i < d; ++i) {
    if (zs[i].size() != a.dim(i)) throw ShapeError("block length mismatch");
    if (LpNorm(zs[i], p) == 0.0) {
      throw DegenerateError("block " + std::to_string(i + 1) + " is zero");
    }
  }
  if (p.is_infinite()) {
    for (auto& z : zs) z /= LpNorm(z, p);
    return zs;
  }
  const double pp = p.value();
  if (pp < 2.0) throw DomainError("rebalancing needs p >= 2");

  auto mass = [&](const Eigen::VectorXd& z) { return std::pow(LpNorm(z, pp), pp); };
  double total = 0.0;
  for (const auto& z : zs) total += mass(z);
  const double pre = std::pow(d / total, 1.0 / pp);
  for (auto& z : zs) z *= pre;

  for (int iter = 0; iter < 10000; ++iter) {
    int j = 0;
    double worst = -1.0;
    double worst_norm_dev = 0.0;
    for (int i = 0; i < d; ++i) {
      const double m = mass(zs[i]);
      worst_norm_dev = std::max(worst_norm_dev,
                                std::abs(std::pow(m, 1.0 / pp) - 1.0));
      if (std::abs(m - 1.0) > worst) {
        worst = std::abs(m - 1.0);
        j = i;
      }
    }
    if (worst_norm_dev <= 1e-10) break;
    const double theta = mass(zs[j]);
    const double others = std::pow((d - 1.0) / (d - theta), 1.0 / pp);
    for (int i = 0; i < d; ++i) {
      zs[i] *= (i == j) ? std::pow(theta, -1.0 / pp) : others;
    }
  }
  // Remove the residual drift; each factor is within 1e-10 of one.
  for (auto& z : zs) z /= LpNorm(z, pp);
  return zs;
}

Tensor EmbedMatrix(const Eigen::MatrixXd& b, int d) {
  if (d < 2) throw DomainError("embedding needs d >= 2");
  std::vector<int> dims(d - 2, 1);
  dims.push_back(static_cast<int>(b.rows()));
  dims.push_back(static_cast<int>(b.cols()));
  return Tensor(std::move(dims), Tensor::FromMatrix(b).entries());
}

}  // namespace lpopt
