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

#include <cstdio>
#include <filesystem>

#include <gtest/gtest.h>

#include "lpopt/error.h"
#include "lpopt/tensor_io.h"
#include "test_util.h"

namespace lpopt {
namespace {

TEST(TensorIoTest, ParsesDense) {
  const Tensor a = ParseTensorJson(R"({"dims":[2,2],"dense":[1,2,3,4]})");
  EXPECT_EQ(a.dims(), (std::vector<int>{2, 2}));
  EXPECT_EQ(a.at({1, 0}), 3.0);
}

TEST(TensorIoTest, ParsesCooOneBased) {
  const Tensor a =
      ParseTensorJson(R"({"dims":[2,3],"coo":[[1,3,5.5],[2,1,-1]]})");
  EXPECT_EQ(a.at({0, 2}), 5.5);
  EXPECT_EQ(a.at({1, 0}), -1.0);
  EXPECT_EQ(a.at({1, 1}), 0.0);
}

TEST(TensorIoTest, RepeatedCooEntriesAdd) {
  const Tensor a = ParseTensorJson(R"({"dims":[2],"coo":[[1,1],[1,2.5]]})");
  EXPECT_EQ(a.at({0}), 3.5);
}

TEST(TensorIoTest, WriterSortsAndSkipsZeros) {
  const Tensor a({2, 2}, {0, 2, 3, 0});
  EXPECT_EQ(TensorToJson(a),
            R"({"dims":[2,2],"coo":[[1,2,2.0],[2,1,3.0]]})" "\n");
}

TEST(TensorIoTest, RoundTripIsExact) {
  Rng rng(1);
  const Tensor a = testing::RandomTensor({3, 1, 2, 2}, rng);
  const Tensor b = ParseTensorJson(TensorToJson(a));
  EXPECT_EQ(a.dims(), b.dims());
  EXPECT_EQ(a.entries(), b.entries());
}

TEST(TensorIoTest, FileRoundTrip) {
  const auto path =
      std::filesystem::temp_directory_path() / "lpopt_tensor_io_test.json";
  const Tensor a({2, 2, 2}, {1, 0, 0, 0, 0, 0, 0, -7.25});
  WriteTensorFile(path.string(), a);
  EXPECT_EQ(ReadTensorFile(path.string()).entries(), a.entries());
  std::filesystem::remove(path);
}

TEST(TensorIoTest, MalformedDocumentsAreParseErrors) {
  for (const char* bad : {
           "not json",
           R"({"coo":[]})",
           R"({"dims":[0,2],"coo":[]})",
           R"({"dims":[2],"dense":[1]})",
           R"({"dims":[2],"coo":[[3,1]]})",
           R"({"dims":[2],"coo":[[0,1]]})",
           R"({"dims":[2,2],"coo":[[1,1]]})",
           R"({"dims":[2],"coo":[[1,"x"]]})",
           R"({"dims":[2],"dense":[1,2],"coo":[]})",
       }) {
    try {
      ParseTensorJson(bad);
      ADD_FAILURE() << "accepted " << bad;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::kParse) << bad;
    }
  }
}

TEST(TensorIoTest, MissingFileIsParseError) {
  try {
    ReadTensorFile("/nonexistent/lpopt/tensor.json");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kParse);
  }
}

TEST(TensorIoTest, SizeCapApplies) {
  try {
    ParseTensorJson(R"({"dims":[100,100,100],"coo":[]})", 1000);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kResource);
  }
}

}  // namespace
}  // namespace lpopt
