// Copyright 2026 The precsimp Authors
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

#include "precsimp/weight.hpp"

#include <cctype>
#include <ostream>
#include <string>

#include "precsimp/error.hpp"

namespace precsimp {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

[[noreturn]] void bad_weight(std::string_view text) {
  throw Error(ErrorCode::kParseError,
              "invalid weight '" + std::string(text) + "'");
}

}  // namespace

Weight::Weight(const BigInt& numerator, const BigInt& denominator) {
  if (denominator == 0) {
    throw Error(ErrorCode::kParseError, "zero denominator");
  }
  if (denominator < 0) {
    value_ = Rational(-numerator, -denominator);
  } else {
    value_ = Rational(numerator, denominator);
  }
}

Weight Weight::parse(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }

  BigInt num;
  BigInt den = 1;
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    std::string_view p = body.substr(0, slash);
    std::string_view q = body.substr(slash + 1);
    if (!all_digits(p) || !all_digits(q)) bad_weight(text);
    num = BigInt(std::string(p));
    den = BigInt(std::string(q));
    if (den == 0) bad_weight(text);
  } else {
    auto dot = body.find('.');
    std::string_view whole = body.substr(0, dot);
    std::string_view frac =
        dot == std::string_view::npos ? std::string_view{} : body.substr(dot + 1);
    if (whole.empty() && frac.empty()) bad_weight(text);
    if (!whole.empty() && !all_digits(whole)) bad_weight(text);
    if (dot != std::string_view::npos && !frac.empty() && !all_digits(frac)) {
      bad_weight(text);
    }
    std::string digits = std::string(whole) + std::string(frac);
    num = BigInt(digits.empty() ? std::string("0") : digits);
    for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
  }
  if (negative) num = -num;
  return Weight(num, den);
}

BigInt Weight::numerator() const {
  return boost::multiprecision::numerator(value_);
}

BigInt Weight::denominator() const {
  return boost::multiprecision::denominator(value_);
}

std::string Weight::to_string() const {
  BigInt den = denominator();
  if (den == 1) return numerator().str();
  return numerator().str() + "/" + den.str();
}

std::ostream& operator<<(std::ostream& os, const Weight& w) {
  return os << w.to_string();
}

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kIndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::kNegativeSelfLoop: return "NegativeSelfLoop";
    case ErrorCode::kInfeasibleSystem: return "InfeasibleSystem";
    case ErrorCode::kSameNode: return "SameNode";
    case ErrorCode::kNotAWalk: return "NotAWalk";
    case ErrorCode::kZeroWeightCycle: return "ZeroWeightCycle";
    case ErrorCode::kNotASubset: return "NotASubset";
    case ErrorCode::kLimitExceeded: return "LimitExceeded";
    case ErrorCode::kExactLimitExceeded: return "ExactLimitExceeded";
    case ErrorCode::kNodeCountMismatch: return "NodeCountMismatch";
    case ErrorCode::kParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace precsimp
