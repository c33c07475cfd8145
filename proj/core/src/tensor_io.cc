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

#include "lpopt/tensor_io.h"

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "lpopt/error.h"

namespace lpopt {

using nlohmann::json;

Tensor ParseTensorJson(std::string_view text, int64_t max_entries) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("tensor file is not valid JSON: ") +
                     e.what());
  }
  if (!doc.is_object() || !doc.contains("dims") || !doc["dims"].is_array()) {
    throw ParseError("tensor document needs a \"dims\" array");
  }
  std::vector<int> dims;
  for (const auto& v : doc["dims"]) {
    if (!v.is_number_integer() || v.get<int64_t>() < 1) {
      throw ParseError("\"dims\" entries must be positive integers");
    }
    dims.push_back(v.get<int>());
  }
  const int64_t volume = CheckedVolume(dims, max_entries);
  const bool has_coo = doc.contains("coo");
  const bool has_dense = doc.contains("dense");
  if (has_coo == has_dense) {
    throw ParseError("tensor document needs exactly one of \"coo\", \"dense\"");
  }

  std::vector<double> data(volume, 0.0);
  if (has_dense) {
    const json& dense = doc["dense"];
    if (!dense.is_array() || static_cast<int64_t>(dense.size()) != volume) {
      throw ParseError("\"dense\" must hold " + std::to_string(volume) +
                       " numbers");
    }
    for (int64_t i = 0; i < volume; ++i) {
      if (!dense[i].is_number()) throw ParseError("non-numeric dense entry");
      data[i] = dense[i].get<double>();
    }
  } else {
    const json& coo = doc["coo"];
    if (!coo.is_array()) throw ParseError("\"coo\" must be an array");
    Tensor shape = Tensor::Zeros(dims, max_entries);
    std::vector<int> index(dims.size());
    for (const auto& row : coo) {
      if (!row.is_array() || row.size() != dims.size() + 1) {
        throw ParseError("coo rows need " + std::to_string(dims.size()) +
                         " indices and a value");
      }
      for (size_t k = 0; k < dims.size(); ++k) {
        if (!row[k].is_number_integer()) {
          throw ParseError("coo indices must be integers");
        }
        const int64_t i = row[k].get<int64_t>();
        if (i < 1 || i > dims[k]) {
          throw ParseError("coo index " + std::to_string(i) +
                           " out of range for dimension " +
                           std::to_string(k + 1));
        }
        index[k] = static_cast<int>(i - 1);
      }
      if (!row.back().is_number()) throw ParseError("non-numeric coo value");
      data[shape.Offset(index)] += row.back().get<double>();
    }
  }
  return Tensor(std::move(dims), std::move(data), max_entries);
}

Tensor ReadTensorFile(const std::string& path, int64_t max_entries) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open tensor file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return ParseTensorJson(buf.str(), max_entries);
}

std::string TensorToJson(const Tensor& a) {
  nlohmann::ordered_json doc;
  doc["dims"] = a.dims();
  json coo = json::array();
  std::vector<int> index(a.order(), 0);
  // Row-major traversal is already lexicographic.
  for (int64_t off = 0; off < a.size(); ++off) {
    const double v = a.entries()[off];
    if (v != 0.0) {
      json row = json::array();
      for (int i : index) row.push_back(i + 1);
      row.push_back(v);
      coo.push_back(std::move(row));
    }
    for (int k = a.order() - 1; k >= 0; --k) {
      if (++index[k] < a.dim(k)) break;
      index[k] = 0;
    }
  }
  doc["coo"] = std::move(coo);
  return doc.dump() + "\n";
}

void WriteTensorFile(const std::string& path, const Tensor& a) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write tensor file '" + path + "'");
  out << TensorToJson(a);
}

}  // namespace lpopt
