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


#ifndef LPOPT_TOOLS_CLI_COMMANDS_H_
#define LPOPT_TOOLS_CLI_COMMANDS_H_

#include <iosfwd>
#include <string>

#include "lpopt/config.h"
#include "lpopt/error.h"
#include "lpopt/exponent.h"
#include "report.h"

namespace lpopt::cli {

enum class OracleMode { kMl, kHp, kPqnorm };

struct CliOptions {
  std::string file;
  Exponent p;  // inf
  SolverConfig cfg;
  int steps = 32;
  bool oracle = false;
  OracleMode mode = OracleMode::kMl;
  std::string out;
};

RunReport CmdSolveHp(const CliOptions& opts);
RunReport CmdSolveMl(const CliOptions& opts);
RunReport CmdPqnorm(const CliOptions& opts);
// Writes sym(A) to opts.out; the report carries the output dims.
RunReport CmdSymmetrize(const CliOptions& opts);
RunReport CmdOracle(const CliOptions& opts);

// Process exit code for a library error category.
int ExitCodeFor(ErrorCode code);

// Full command line front end. Returns the process exit code.
int RunCli(int argc, const char* const* argv, std::ostream& out,
           std::ostream& err);

}  // namespace lpopt::cli

#endif  // LPOPT_TOOLS_CLI_COMMANDS_H_
