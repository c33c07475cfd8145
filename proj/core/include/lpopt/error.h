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

#ifndef LPOPT_ERROR_H_
#define LPOPT_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace lpopt {

// Failure categories surfaced by the library. The CLI maps each category to a
// distinct process exit code.
enum class ErrorCode {
  kShape,        // Vector or tensor dimensions do not match.
  kDomain,       // Argument outside the mathematical domain of the operation.
  kDegenerate,   // Input is degenerate (zero block, zero tensor, ...).
  kResource,     // A size or evaluation budget gate was exceeded.
  kConvergence,  // An iterative solver ran out of iterations.
  kParse,        // Malformed text input.
  kInternal,     // A guarantee that must hold by construction was violated.
};

std::string_view ErrorCodeName(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

inline Error ShapeError(const std::string& msg) {
  return Error(ErrorCode::kShape, msg);
}
inline Error DomainError(const std::string& msg) {
  return Error(ErrorCode::kDomain, msg);
}
inline Error DegenerateError(const std::string& msg) {
  return Error(ErrorCode::kDegenerate, msg);
}
inline Error ResourceError(const std::string& msg) {
  return Error(ErrorCode::kResource, msg);
}
inline Error ParseError(const std::string& msg) {
  return Error(ErrorCode::kParse, msg);
}
inline Error InternalError(const std::string& msg) {
  return Error(ErrorCode::kInternal, msg);
}

}  // namespace lpopt

#endif  // LPOPT_ERROR_H_
