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

#include "pdcover/numeric.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace pdcover {

std::string_view NumericModeName(NumericMode mode) {
  switch (mode) {
    case NumericMode::kFloat64: return "float";
    case NumericMode::kRational: return "rational";
    case NumericMode::kScaledInteger: return "int";
  }
  return "unknown";
}

std::optional<NumericMode> ParseNumericMode(std::string_view text) {
  if (text == "float") return NumericMode::kFloat64;
  if (text == "rational") return NumericMode::kRational;
  if (text == "int") return NumericMode::kScaledInteger;
  return std::nullopt;
}

namespace {

constexpr int kMaxFractionDigits = 9;

bool AllDigits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

// Base-10 only; the string constructor treats a leading 0 as octal.
BigInt DecimalInt(std::string_view digits) {
  const auto first = digits.find_first_not_of('0');
  if (first == std::string_view::npos) return 0;
  return BigInt(std::string(digits.substr(first)));
}

}  // namespace

std::optional<Rational> ParseDecimal(std::string_view text) {
  const auto dot = text.find('.');
  const std::string_view whole = text.substr(0, dot);
  if (!AllDigits(whole)) return std::nullopt;
  std::string digits(whole);
  int fraction_digits = 0;
  if (dot != std::string_view::npos) {
    const std::string_view frac = text.substr(dot + 1);
    if (!AllDigits(frac) || frac.size() > kMaxFractionDigits) {
      return std::nullopt;
    }
    digits += frac;
    fraction_digits = static_cast<int>(frac.size());
  }
  BigInt den = 1;
  for (int i = 0; i < fraction_digits; ++i) den *= 10;
  return Rational(DecimalInt(digits), den);
}

std::optional<std::string> FormatDecimal(const Rational& value) {
  if (value < 0) return std::nullopt;
  const BigInt scale = 1000000000;
  const BigInt den = denominator(value);
  if (scale % den != 0) return std::nullopt;
  const BigInt scaled = numerator(value) * (scale / den);
  const BigInt whole = scaled / scale;
  BigInt frac = scaled % scale;
  std::string out = whole.str();
  if (frac != 0) {
    std::string digits = frac.str();
    digits.insert(0, kMaxFractionDigits - digits.size(), '0');
    while (!digits.empty() && digits.back() == '0') digits.pop_back();
    out += '.';
    out += digits;
  }
  return out;
}

std::string FormatRational(const Rational& value) {
  if (denominator(value) == 1) return numerator(value).str();
  return numerator(value).str() + "/" + denominator(value).str();
}

std::optional<Rational> ParseRational(std::string_view text) {
  bool negative = false;
  if (!text.empty() && text.front() == '-') {
    negative = true;
    text.remove_prefix(1);
  }
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  if (!AllDigits(num)) return std::nullopt;
  BigInt den = 1;
  if (slash != std::string_view::npos) {
    const std::string_view d = text.substr(slash + 1);
    if (!AllDigits(d)) return std::nullopt;
    den = DecimalInt(d);
    if (den == 0) return std::nullopt;
  }
  Rational out(DecimalInt(num), den);
  return negative ? Rational(-out) : out;
}

bool IsInteger(const Rational& value) { return denominator(value) == 1; }

double ToDouble(const Rational& value) { return value.convert_to<double>(); }

unsigned BitLength(const BigInt& value) {
  if (value <= 0) return 0;
  return static_cast<unsigned>(msb(value)) + 1;
}

// ScaledInt

ScaledInt ScaledInt::FromBigInt(const BigInt& value) {
  if (value < 0 || BitLength(value) > 126) {
    throw Error(ErrorCode::kNumericOverflow,
                "value does not fit the 128-bit scaled-integer range");
  }
  ScaledInt out;
  // Two 63-bit halves.
  const BigInt mask = (BigInt(1) << 63) - 1;
  const auto lo = static_cast<std::int64_t>(value & mask);
  const auto hi = static_cast<std::int64_t>(value >> 63);
  out.v_ = (static_cast<__int128>(hi) << 63) | lo;
  return out;
}

BigInt ScaledInt::ToBigInt() const {
  const bool negative = v_ < 0;
  unsigned __int128 mag = negative ? -static_cast<unsigned __int128>(v_)
                                   : static_cast<unsigned __int128>(v_);
  const auto lo = static_cast<std::uint64_t>(mag);
  const auto hi = static_cast<std::uint64_t>(mag >> 64);
  BigInt out = (BigInt(hi) << 64) + BigInt(lo);
  return negative ? BigInt(-out) : out;
}

void ScaledInt::Overflow() {
  throw Error(ErrorCode::kNumericOverflow, "scaled-integer overflow");
}

// Epsilon

Epsilon::Epsilon(const Rational& value) : exact_(value) {
  if (value <= 0 || value >= 1) {
    throw Error(ErrorCode::kEpsOutOfRange,
                "eps must lie in (0, 1), got " + FormatRational(value));
  }
  value_ = ToDouble(value);
}

Epsilon Epsilon::Parse(std::string_view text) {
  const auto parsed = ParseDecimal(text);
  if (!parsed) {
    throw Error(ErrorCode::kEpsOutOfRange,
                "eps is not a decimal: '" + std::string(text) + "'");
  }
  return Epsilon(*parsed);
}

Epsilon Epsilon::Ratio(std::int64_t num, std::int64_t den) {
  if (den == 0) throw Error(ErrorCode::kEpsOutOfRange, "zero denominator");
  return Epsilon(Rational(num, den));
}

double Epsilon::LogInverse() const { return -std::log(value_); }

std::string Epsilon::ToString() const {
  if (auto d = FormatDecimal(exact_)) return *d;
  return FormatRational(exact_);
}

}  // namespace pdcover
