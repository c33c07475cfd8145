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

#ifndef LPOPT_EXPONENT_H_
#define LPOPT_EXPONENT_H_

#include <cstdint>
#include <string>
#include <string_view>

namespace lpopt {

// The norm exponent p of an L_p ball, p in [1, inf].
//
// Rational exponents ("7/2", "2.5") are stored exactly as num/den so that the
// conjugate exponent q = p / (p - 1) = num / (num - den) is formed from
// integers rather than from a rounded double.
class Exponent {
 public:
  // Defaults to p = inf.
  Exponent() = default;

  static Exponent Infinity();
  static Exponent Rational(int64_t num, int64_t den);
  // Exact when `p` is an integer; otherwise the double is kept as is.
  static Exponent FromDouble(double p);
  // Accepts "inf", "a/b" or a plain decimal such as "2.5" or "3".
  static Exponent Parse(std::string_view text);

  bool is_infinite() const { return infinite_; }
  bool is_rational() const { return infinite_ || den_ != 0; }

  // p as a double; +infinity when infinite.
  double value() const;
  // q = p / (p - 1); 1 when p is infinite.
  double conjugate() const;

  // "inf", "3", "7/2", or the shortest round-trip decimal for non-rational p.
  std::string ToString() const;

  friend bool operator==(const Exponent& a, const Exponent& b);

 private:
  bool infinite_ = true;
  int64_t num_ = 0;
  int64_t den_ = 0;  // 0 when the exponent is an irrational double.
  double value_ = 0.0;
};

}  // namespace lpopt

#endif  // LPOPT_EXPONENT_H_
