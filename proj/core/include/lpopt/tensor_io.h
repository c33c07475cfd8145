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


#ifndef LPOPT_TENSOR_IO_H_
#define LPOPT_TENSOR_IO_H_

#include <string>
#include <string_view>

#include "lpopt/tensor.h"

namespace lpopt {

// JSON tensor documents:
//   {"dims": [n1, ..., nd], "coo": [[i1, ..., id, value], ...]}  (1-based)
//   {"dims": [n1, ..., nd], "dense": [v, ...]}                   (row-major)
// Unlisted coo entries are zero; repeated coo entries are summed.
Tensor ParseTensorJson(std::string_view text,
                       int64_t max_entries = kDefaultMaxEntries);
Tensor ReadTensorFile(const std::string& path,
                      int64_t max_entries = kDefaultMaxEntries);

// Emits the coo form with indices sorted lexicographically; zeros skipped.
std::string TensorToJson(const Tensor& a);
void WriteTensorFile(const std::string& path, const Tensor& a);

}  // namespace lpopt

#endif  // LPOPT_TENSOR_IO_H_
