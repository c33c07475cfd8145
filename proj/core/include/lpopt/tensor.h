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


#ifndef LPOPT_TENSOR_H_
#define LPOPT_TENSOR_H_

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include <Eigen/Core>

#include "lpopt/config.h"

namespace lpopt {

// Dense real tensor of order d with dims (n_1, ..., n_d), stored row-major
// (last index fastest). Immutable after construction. An order-0 tensor is a
// scalar: empty dims, one entry.
class Tensor {
 public:
  // Order-0 tensor holding 0.
  Tensor();
  Tensor(std::vector<int> dims, std::vector<double> entries,
         int64_t max_entries = kDefaultMaxEntries);

  static Tensor Zeros(std::vector<int> dims,
                      int64_t max_entries = kDefaultMaxEntries);
  static Tensor Scalar(double value);
  static Tensor FromMatrix(const Eigen::MatrixXd& m);

  int order() const { return static_cast<int>(dims_.size()); }
  const std::vector<int>& dims() const { return dims_; }
  int dim(int i) const { return dims_[i]; }
  int64_t size() const { return static_cast<int64_t>(entries_.size()); }
  const std::vector<double>& entries() const { return entries_; }
  const std::vector<int64_t>& strides() const { return strides_; }

  // Row-major offset of a 0-based multi-index. Unchecked.
  int64_t Offset(std::span<const int> index) const;
  double operator()(std::span<const int> index) const {
    return entries_[Offset(index)];
  }
  double at(std::initializer_list<int> index) const;

  // Value of an order-0 tensor.
  double scalar() const { return entries_[0]; }
  // Order-2 tensors only.
  Eigen::MatrixXd ToMatrix() const;
  Eigen::VectorXd ToVector() const;

  bool IsCubical() const;
  bool IsZero() const;
  double MaxAbs() const;
  Tensor Scaled(double alpha) const;

 private:
  std::vector<int> dims_;
  std::vector<int64_t> strides_;
  std::vector<double> entries_;
};

// Number of entries of a tensor with the given dims. Throws a resource error
// when the product exceeds `max_entries` (or overflows).
int64_t CheckedVolume(const std::vector<int>& dims, int64_t max_entries);

// Index position (0-based) -> vector to contract against.
struct ContractionSpec {
  std::map<int, Eigen::VectorXd> assignments;
};

// F_A(x^1, ..., x^d).
double EvalMultilinear(const Tensor& a, const std::vector<Eigen::VectorXd>& xs);

// Sums out the assigned indices. Contracting every index yields an order-0
// tensor.
Tensor Contract(const Tensor& a, const ContractionSpec& spec);
// A(x, ., ..., .): contraction of the first index.
Tensor ContractFirst(const Tensor& a, const Eigen::VectorXd& x);

bool IsSupersymmetric(const Tensor& a, double tol = 1e-12);

// A tensor known to be super-symmetric.
class SymmetricTensor {
 public:
  // Throws a domain error unless IsSupersymmetric(t, tol).
  static SymmetricTensor Check(Tensor t, double tol = 1e-9);

  const Tensor& tensor() const { return tensor_; }
  int order() const { return tensor_.order(); }
  int n() const { return tensor_.order() == 0 ? 0 : tensor_.dim(0); }

 private:
  explicit SymmetricTensor(Tensor t) : tensor_(std::move(t)) {}
  Tensor tensor_;
};

// f_A(x) = F_A(x, ..., x).
double EvalPoly(const SymmetricTensor& a, const Eigen::VectorXd& x);
// Checks super-symmetry first; throws a domain error if it fails.
double EvalPoly(const Tensor& a, const Eigen::VectorXd& x);

}  // namespace lpopt

#endif  // LPOPT_TENSOR_H_
