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


#ifndef LPOPT_TOOLS_CLI_REPORT_H_
#define LPOPT_TOOLS_CLI_REPORT_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace lpopt::cli {

using Json = nlohmann::ordered_json;

// Everything a command prints. `timing` is the only field that varies between
// identical invocations.
struct RunReport {
  std::string command;
  std::string file;
  std::vector<int> dims;
  int order = 0;
  std::string p;
  uint64_t seed = 0;
  Json config = Json::object();
  Json certificate = Json::object();
  std::optional<Json> oracle;
  std::string started_at;
  double wall_time_ms = 0.0;

  friend bool operator==(const RunReport&, const RunReport&) = default;
};

Json ToJson(const RunReport& report);
// Throws lpopt::Error(kParse) on a malformed document.
RunReport FromJson(const Json& doc);

std::string RenderJson(const RunReport& report);
// One "key: value" line per leaf, nested keys joined with '.'.
std::string RenderText(const RunReport& report);

}  // namespace lpopt::cli

#endif  // LPOPT_TOOLS_CLI_REPORT_H_
