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

#include "lpopt/tensor.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "lpopt/error.h"
#include "lpopt/rng.h"

namespace lpopt {
namespace {

std::vector<int64_t> RowMajorStrides(const std::vector<int>& dims) {
  std::vector<int64_t> strides(dims.size(), 1);
  for (int k = static_cast<int>(dims.size()) - 2; k >= 0; --k) {
    strides[k] = strides[k + 1] * dims[k + 1];
  }
  return strides;
}

// Contracts index `pos` of (dims, data) against x.
std::vector<double> ContractIndex(const std::vector<int>& dims,
                                  const std::vector<double>& data, int pos,
                                  const Eigen::VectorXd& x) {
  int64_t outer = 1;
  int64_t inner = 1;
  for (int k = 0; k < pos; ++k) outer *= dims[k];
  for (int k = pos + 1; k < static_cast<int>(dims.size()); ++k) {
    inner *= dims[k];
  }
  const int nj = dims[pos];
  std::vector<double> out(outer * inner, 0.0);
  for (int64_t o = 0; o < outer; ++o) {
    double* dst = out.data() + o * inner;
    const double* src = data.data() + o * nj * inner;
    for (int t = 0; t < nj; ++t) {
      const double xt = x[t];
      if (xt == 0.0) continue;
      const double* row = src + t * inner;
      for (int64_t i = 0; i < inner; ++i) dst[i] += xt * row[i];
    }
  }
  return out;
}

void CheckVectorLength(const Eigen::VectorXd& x, int expected, int pos) {
  if (x.size() != expected) {
    throw ShapeError("vector for index " + std::to_string(pos + 1) +
                     " has length " + std::to_string(x.size()) +
                     ", expected " + std::to_string(expected));
  }
}

}  // namespace

int64_t CheckedVolume(const std::vector<int>& dims, int64_t max_entries) {
  int64_t volume = 1;
  for (int n : dims) {
    if (n < 1) throw ShapeError("tensor dimensions must be positive");
    if (volume > max_entries / n) {
      throw ResourceError("tensor exceeds the entry cap of " +
                          std::to_string(max_entries));
    }
    volume *= n;
  }
  return volume;
}

Tensor::Tensor() : entries_(1, 0.0) {}

Tensor::Tensor(std::vector<int> dims, std::vector<double> entries,
               int64_t max_entries)
    : dims_(std::move(dims)), entries_(std::move(entries)) {
  const int64_t volume = CheckedVolume(dims_, max_entries);
  if (static_cast<int64_t>(entries_.size()) != volume) {
    throw ShapeError("tensor has " + std::to_string(entries_.size()) +
                     " entries, dims require " + std::to_string(volume));
  }
  strides_ = RowMajorStrides(dims_);
}

Tensor Tensor::Zeros(std::vector<int> dims, int64_t max_entries) {
  const int64_t volume = CheckedVolume(dims, max_entries);
  return Tensor(std::move(dims), std::vector<double>(volume, 0.0),
                max_entries);
}

Tensor Tensor::Scalar(double value) { return Tensor({}, {value}); }

Tensor Tensor::FromMatrix(const Eigen::MatrixXd& m) {
  std::vector<double> data(m.size());
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      data[i * m.cols() + j] = m(i, j);
    }
  }
  return Tensor({static_cast<int>(m.rows()), static_cast<int>(m.cols())},
                std::move(data));
}

int64_t Tensor::Offset(std::span<const int> index) const {
  int64_t off = 0;
  for (size_t k = 0; k < index.size(); ++k) off += index[k] * strides_[k];
  return off;
}

double Tensor::at(std::initializer_list<int> index) const {
  if (static_cast<int>(index.size()) != order()) {
    throw ShapeError("index arity does not match tensor order");
  }
  int k = 0;
  for (int i : index) {
    if (i < 0 || i >= dims_[k]) throw ShapeError("tensor index out of range");
    ++k;
  }
  return entries_[Offset(std::span<const int>(index.begin(), index.size()))];
}

Eigen::MatrixXd Tensor::ToMatrix() const {
  if (order() != 2) throw ShapeError("expected an order-2 tensor");
  Eigen::MatrixXd m(dims_[0], dims_[1]);
  for (int i = 0; i < dims_[0]; ++i) {
    for (int j = 0; j < dims_[1]; ++j) m(i, j) = entries_[i * dims_[1] + j];
  }
  return m;
}

Eigen::VectorXd Tensor::ToVector() const {
  if (order() != 1) throw ShapeError("expected an order-1 tensor");
  return Eigen::Map<const Eigen::VectorXd>(entries_.data(), size());
}

bool Tensor::IsCubical() const {
  return std::all_of(dims_.begin(), dims_.end(),
                     [&](int n) { return n == dims_.front(); });
}

bool Tensor::IsZero() const {
  return std::all_of(entries_.begin(), entries_.end(),
                     [](double v) { return v == 0.0; });
}

double Tensor::MaxAbs() const {
  double m = 0.0;
  for (double v : entries_) m = std::max(m, std::abs(v));
  return m;
}

Tensor Tensor::Scaled(double alpha) const {
  std::vector<double> data(entries_);
  for (double& v : data) v *= alpha;
  return Tensor(dims_, std::move(data), std::numeric_limits<int64_t>::max());
}

double EvalMultilinear(const Tensor& a,
                       const std::vector<Eigen::VectorXd>& xs) {
  if (static_cast<int>(xs.size()) != a.order()) {
    throw ShapeError("expected " + std::to_string(a.order()) +
                     " vectors, got " + std::to_string(xs.size()));
  }
  for (int k = 0; k < a.order(); ++k) CheckVectorLength(xs[k], a.dim(k), k);
  if (a.order() == 0) return a.scalar();
  // Peel the last index each time so the inner loop is a contiguous dot.
  std::vector<int> dims = a.dims();
  std::vector<double> data = ContractIndex(dims, a.entries(), a.order() - 1,
                                           xs.back());
  dims.pop_back();
  for (int k = a.order() - 2; k >= 0; --k) {
    data = ContractIndex(dims, data, k, xs[k]);
    dims.pop_back();
  }
  return data[0];
}

Tensor Contract(const Tensor& a, const ContractionSpec& spec) {
  if (spec.assignments.empty()) {
    throw ShapeError("contraction needs at least one index");
  }
  for (const auto& [pos, x] : spec.assignments) {
    if (pos < 0 || pos >= a.order()) {
      throw ShapeError("contraction index " + std::to_string(pos + 1) +
                       " out of range");
    }
    CheckVectorLength(x, a.dim(pos), pos);
  }
  std::vector<int> dims = a.dims();
  std::vector<double> data = a.entries();
  // Highest position first so the remaining positions stay valid.
  for (auto it = spec.assignments.rbegin(); it != spec.assignments.rend();
       ++it) {
    data = ContractIndex(dims, data, it->first, it->second);
    dims.erase(dims.begin() + it->first);
  }
  return Tensor(std::move(dims), std::move(data),
                std::numeric_limits<int64_t>::max());
}

Tensor ContractFirst(const Tensor& a, const Eigen::VectorXd& x) {
  if (a.order() < 1) throw ShapeError("cannot contract an order-0 tensor");
  CheckVectorLength(x, a.dim(0), 0);
  std::vector<int> dims(a.dims().begin() + 1, a.dims().end());
  return Tensor(std::move(dims), ContractIndex(a.dims(), a.entries(), 0, x),
                std::numeric_limits<int64_t>::max());
}

bool IsSupersymmetric(const Tensor& a, double tol) {
  const int d = a.order();
  if (d <= 1) return true;
  if (!a.IsCubical()) return false;
  const int n = a.dim(0);
  const double bound = tol * (1.0 + a.MaxAbs());

  std::vector<std::vector<int>> perms;
  std::vector<int> pi(d);
  std::iota(pi.begin(), pi.end(), 0);
  if (d <= 8) {
    while (std::next_permutation(pi.begin(), pi.end())) perms.push_back(pi);
  } else {
    Rng rng(0x5eed);
    for (int s = 0; s < 1000; ++s) {
      std::shuffle(pi.begin(), pi.end(), rng.engine());
      perms.push_back(pi);
    }
  }

  const auto& e = a.entries();
  const auto& strides = a.strides();
  std::vector<int> idx(d, 0);
  for (int64_t off = 0; off < a.size(); ++off) {
    for (const auto& perm : perms) {
      int64_t other = 0;
      for (int k = 0; k < d; ++k) other += idx[perm[k]] * strides[k];
      if (std::abs(e[off] - e[other]) > bound) return false;
    }
    for (int k = d - 1; k >= 0; --k) {
      if (++idx[k] < n) break;
      idx[k] = 0;
    }
  }
  return true;
}

SymmetricTensor SymmetricTensor::Check(Tensor t, double tol) {
  if (!IsSupersymmetric(t, tol)) {
    throw DomainError("tensor is not super-symmetric");
  }
  return SymmetricTensor(std::move(t));
}

double EvalPoly(const SymmetricTensor& a, const Eigen::VectorXd& x) {
  const Tensor& t = a.tensor();
  return EvalMultilinear(t, std::vector<Eigen::VectorXd>(t.order(), x));
}

double EvalPoly(const Tensor& a, const Eigen::VectorXd& x) {
  if (!IsSupersymmetric(a, 1e-12)) {
    throw DomainError("tensor is not super-symmetric");
  }
  return EvalMultilinear(a, std::vector<Eigen::VectorXd>(a.order(), x));
}

}  // namespace lpopt
