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

#include "lpopt/exponent.h"

#include <charconv>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

#include "lpopt/error.h"

namespace lpopt {
namespace {

bool ParseInt(std::string_view text, int64_t& out) {
  if (text.empty()) return false;
  const char* begin = text.data();
  const char* end = text.data() + text.size();
  if (*begin == '+') ++begin;
  auto [ptr, ec] = std::from_chars(begin, end, out);
  return ec == std::errc() && ptr == end;
}

std::string Trim(std::string_view text) {
  size_t b = 0;
  size_t e = text.size();
  while (b < e && std::isspace(static_cast<unsigned char>(text[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(text[e - 1]))) --e;
  return std::string(text.substr(b, e - b));
}

}  // namespace

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kShape:
      return "shape";
    case ErrorCode::kDomain:
      return "domain";
    case ErrorCode::kDegenerate:
      return "degenerate";
    case ErrorCode::kResource:
      return "resource";
    case ErrorCode::kConvergence:
      return "convergence";
    case ErrorCode::kParse:
      return "parse";
    case ErrorCode::kInternal:
      return "internal";
  }
  return "unknown";
}

Exponent Exponent::Infinity() { return Exponent(); }

Exponent Exponent::Rational(int64_t num, int64_t den) {
  if (den == 0) throw DomainError("exponent denominator is zero");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  if (num < den) throw DomainError("exponent must be at least 1");
  const int64_t g = std::gcd(num, den);
  Exponent e;
  e.infinite_ = false;
  e.num_ = num / g;
  e.den_ = den / g;
  e.value_ = static_cast<double>(static_cast<long double>(e.num_) /
                                 static_cast<long double>(e.den_));
  return e;
}

Exponent Exponent::FromDouble(double p) {
  if (std::isinf(p) && p > 0) return Infinity();
  if (!(p >= 1.0)) throw DomainError("exponent must be at least 1");
  if (p == std::floor(p) && p < 1e15) {
    return Rational(static_cast<int64_t>(p), 1);
  }
  Exponent e;
  e.infinite_ = false;
  e.value_ = p;
  return e;
}

Exponent Exponent::Parse(std::string_view raw) {
  const std::string text = Trim(raw);
  if (text == "inf" || text == "Inf" || text == "INF" || text == "infinity" ||
      text == "oo") {
    return Infinity();
  }
  if (const size_t slash = text.find('/'); slash != std::string::npos) {
    int64_t num = 0;
    int64_t den = 0;
    if (!ParseInt(std::string_view(text).substr(0, slash), num) ||
        !ParseInt(std::string_view(text).substr(slash + 1), den) || den == 0) {
      throw ParseError("malformed rational exponent '" + text + "'");
    }
    return Rational(num, den);
  }
  // Plain decimal: keep it exact as digits / 10^k.
  const size_t dot = text.find('.');
  if (text.find_first_of("eE") == std::string::npos && !text.empty()) {
    std::string digits = text;
    int64_t scale = 1;
    if (dot != std::string::npos) {
      const std::string frac = text.substr(dot + 1);
      digits = text.substr(0, dot) + frac;
      if (frac.size() > 15) digits.clear();
      for (size_t i = 0; i < frac.size() && !digits.empty(); ++i) scale *= 10;
    }
    int64_t num = 0;
    if (!digits.empty() && ParseInt(digits, num)) return Rational(num, scale);
  }
  double p = 0.0;
  std::istringstream in(text);
  in >> p;
  if (in.fail() || !in.eof()) {
    throw ParseError("malformed exponent '" + text + "'");
  }
  return FromDouble(p);
}

double Exponent::value() const {
  return infinite_ ? std::numeric_limits<double>::infinity() : value_;
}

double Exponent::conjugate() const {
  if (infinite_) return 1.0;
  if (den_ != 0) {
    // q = num / (num - den), evaluated in extended precision.
    return static_cast<double>(static_cast<long double>(num_) /
                               static_cast<long double>(num_ - den_));
  }
  const long double p = value_;
  return static_cast<double>(p / (p - 1.0L));
}

std::string Exponent::ToString() const {
  if (infinite_) return "inf";
  if (den_ == 1) return std::to_string(num_);
  if (den_ != 0) return std::to_string(num_) + "/" + std::to_string(den_);
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value_);
  return std::string(buf, ptr);
}

bool operator==(const Exponent& a, const Exponent& b) {
  if (a.infinite_ || b.infinite_) return a.infinite_ == b.infinite_;
  return a.value() == b.value();
}

}  // namespace lpopt
