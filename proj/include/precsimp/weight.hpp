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

#ifndef PRECSIMP_WEIGHT_HPP_
#define PRECSIMP_WEIGHT_HPP_

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace precsimp {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Exact rational edge weight. The underlying rational is always kept in
// lowest terms with a positive denominator.
class Weight {
 public:
  Weight() = default;
  Weight(std::int64_t value) : value_(value) {}  // NOLINT(runtime/explicit)
  explicit Weight(Rational value) : value_(std::move(value)) {}
  Weight(const BigInt& numerator, const BigInt& denominator);

  // Accepts an optionally signed integer ("-2"), decimal ("0.5", "-.25")
  // or fraction ("-3/2"). Throws Error(kParseError) on anything else.
  static Weight parse(std::string_view text);

  const Rational& value() const { return value_; }
  BigInt numerator() const;
  BigInt denominator() const;

  bool is_zero() const { return value_ == 0; }
  bool is_negative() const { return value_ < 0; }
  bool is_positive() const { return value_ > 0; }

  // Integer when the denominator is 1, otherwise "p/q".
  std::string to_string() const;

  Weight& operator+=(const Weight& other) {
    value_ += other.value_;
    return *this;
  }
  Weight& operator-=(const Weight& other) {
    value_ -= other.value_;
    return *this;
  }

  friend Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
  friend Weight operator-(const Weight& a) { return Weight(Rational(-a.value_)); }

  friend bool operator==(const Weight& a, const Weight& b) {
    return a.value_ == b.value_;
  }
  friend std::strong_ordering operator<=>(const Weight& a, const Weight& b) {
    if (a.value_ < b.value_) return std::strong_ordering::less;
    if (b.value_ < a.value_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

 private:
  Rational value_{0};
};

std::ostream& operator<<(std::ostream& os, const Weight& w);

}  // namespace precsimp

#endif  // PRECSIMP_WEIGHT_HPP_
