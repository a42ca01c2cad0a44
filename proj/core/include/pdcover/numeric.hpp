// Copyright 2026 The pdcover Authors
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

#ifndef PDCOVER_NUMERIC_HPP_
#define PDCOVER_NUMERIC_HPP_

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include <boost/multiprecision/gmp.hpp>

#include "pdcover/error.hpp"

namespace pdcover {

using Rational = boost::multiprecision::number<
    boost::multiprecision::gmp_rational, boost::multiprecision::et_off>;
using BigInt = boost::multiprecision::number<
    boost::multiprecision::gmp_int, boost::multiprecision::et_off>;

enum class NumericMode { kFloat64, kRational, kScaledInteger };

std::string_view NumericModeName(NumericMode mode);
// Accepts "float", "rational", "int" (the CLI spellings).
std::optional<NumericMode> ParseNumericMode(std::string_view text);

// Parses an unsigned decimal such as "12", "0.25" or "3.000000001" into an
// exact rational. At most nine fractional digits; no sign, no exponent.
std::optional<Rational> ParseDecimal(std::string_view text);

// Writes `value` as a terminating decimal if its denominator divides 10^9,
// otherwise returns nullopt.
std::optional<std::string> FormatDecimal(const Rational& value);

// "num/den", or just "num" for integers.
std::string FormatRational(const Rational& value);
std::optional<Rational> ParseRational(std::string_view text);

bool IsInteger(const Rational& value);
double ToDouble(const Rational& value);

// Number of bits needed to represent a positive integer.
unsigned BitLength(const BigInt& value);

// Signed 128-bit integer used by the scaled-integer engine. It has no
// conversion from floating point and every operation is overflow-checked, so
// a run in that mode is integer-only by construction.
class ScaledInt {
 public:
  constexpr ScaledInt() = default;
  constexpr explicit ScaledInt(std::int64_t v) : v_(v) {}

  static ScaledInt FromBigInt(const BigInt& value);
  BigInt ToBigInt() const;
  double ToDouble() const { return static_cast<double>(v_); }

  friend ScaledInt operator+(ScaledInt a, ScaledInt b) {
    ScaledInt out;
    if (__builtin_add_overflow(a.v_, b.v_, &out.v_)) Overflow();
    return out;
  }
  friend ScaledInt operator-(ScaledInt a, ScaledInt b) {
    ScaledInt out;
    if (__builtin_sub_overflow(a.v_, b.v_, &out.v_)) Overflow();
    return out;
  }
  friend ScaledInt operator*(ScaledInt a, ScaledInt b) {
    ScaledInt out;
    if (__builtin_mul_overflow(a.v_, b.v_, &out.v_)) Overflow();
    return out;
  }
  ScaledInt& operator+=(ScaledInt o) { return *this = *this + o; }
  ScaledInt& operator-=(ScaledInt o) { return *this = *this - o; }

  // Floor division for a non-negative dividend and positive divisor.
  friend ScaledInt FloorDiv(ScaledInt a, std::int64_t b) {
    ScaledInt out;
    out.v_ = a.v_ / b;
    if ((a.v_ % b != 0) && ((a.v_ < 0) != (b < 0))) --out.v_;
    return out;
  }

  friend bool operator==(ScaledInt, ScaledInt) = default;
  friend auto operator<=>(ScaledInt a, ScaledInt b) { return a.v_ <=> b.v_; }

 private:
  [[noreturn]] static void Overflow();

  __int128 v_ = 0;
};

// Approximation parameter held as an exact rational in (0, 1), with its
// binary64 value cached.
class Epsilon {
 public:
  // Throws Error(kEpsOutOfRange) unless 0 < value < 1.
  explicit Epsilon(const Rational& value);

  // Decimal spelling, e.g. "0.1". Throws kEpsOutOfRange on a malformed or
  // out-of-range value.
  static Epsilon Parse(std::string_view text);
  static Epsilon Ratio(std::int64_t num, std::int64_t den);

  const Rational& exact() const { return exact_; }
  double value() const { return value_; }
  // ln(1/eps), evaluated in binary64.
  double LogInverse() const;
  std::string ToString() const;

 private:
  Rational exact_;
  double value_;
};

}  // namespace pdcover

#endif  // PDCOVER_NUMERIC_HPP_
