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

#include "report.h"

#include <sstream>

#include "lpopt/error.h"

namespace lpopt::cli {
namespace {

void Flatten(const std::string& prefix, const Json& value, std::ostream& out) {
  if (value.is_object() && !value.empty()) {
    for (const auto& [key, child] : value.items()) {
      Flatten(prefix.empty() ? key : prefix + "." + key, child, out);
    }
    return;
  }
  out << prefix << ": ";
  if (value.is_string()) {
    out << value.get<std::string>();
  } else {
    out << value.dump();
  }
  out << "\n";
}

}  // namespace

Json ToJson(const RunReport& r) {
  Json doc;
  doc["command"] = r.command;
  doc["instance"] = {{"file", r.file}, {"dims", r.dims}, {"order", r.order},
                     {"p", r.p}};
  doc["seed"] = r.seed;
  doc["config"] = r.config;
  doc["certificate"] = r.certificate;
  if (r.oracle) doc["oracle"] = *r.oracle;
  doc["timing"] = {{"started_at", r.started_at},
                   {"wall_time_ms", r.wall_time_ms}};
  return doc;
}

RunReport FromJson(const Json& doc) {
  try {
    RunReport r;
    r.command = doc.at("command").get<std::string>();
    const Json& inst = doc.at("instance");
    r.file = inst.at("file").get<std::string>();
    r.dims = inst.at("dims").get<std::vector<int>>();
    r.order = inst.at("order").get<int>();
    r.p = inst.at("p").get<std::string>();
    r.seed = doc.at("seed").get<uint64_t>();
    r.config = doc.at("config");
    r.certificate = doc.at("certificate");
    if (doc.contains("oracle")) r.oracle = doc.at("oracle");
    r.started_at = doc.at("timing").at("started_at").get<std::string>();
    r.wall_time_ms = doc.at("timing").at("wall_time_ms").get<double>();
    return r;
  } catch (const Json::exception& e) {
    throw ParseError(std::string("malformed report: ") + e.what());
  }
}

std::string RenderJson(const RunReport& report) {
  return ToJson(report).dump(2) + "\n";
}

std::string RenderText(const RunReport& report) {
  std::ostringstream out;
  Flatten("", ToJson(report), out);
  return out.str();
}

}  // namespace lpopt::cli
