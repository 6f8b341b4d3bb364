// Copyright 2026 The BMFNI Authors
//
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

#include "bmfni/rational.h"

#include <cctype>
#include <numeric>

#include "bmfni/errors.h"

namespace bmfni {
namespace {

constexpr std::int64_t kLimit = std::int64_t{1} << 62;

[[noreturn]] void Malformed(std::string_view text) {
  throw Error(ErrorCode::kInvalidArgument,
              "malformed rational '" + std::string(text) + "'");
}

std::int64_t ParseDigits(std::string_view digits, std::string_view text) {
  if (digits.empty()) Malformed(text);
  std::int64_t value = 0;
  for (char c : digits) {
    if (!std::isdigit(static_cast<unsigned char>(c))) Malformed(text);
    if (value > (kLimit - 9) / 10) Malformed(text);
    value = value * 10 + (c - '0');
  }
  return value;
}

std::int64_t Pow10(int exponent, std::string_view text) {
  std::int64_t p = 1;
  for (int i = 0; i < exponent; ++i) {
    if (p > kLimit / 10) Malformed(text);
    p *= 10;
  }
  return p;
}

}  // namespace

Rational Rational::Make(std::int64_t num, std::int64_t den) {
  if (num < 0 || den <= 0) {
    throw Error(ErrorCode::kInvalidArgument, "rational must be num>=0, den>0");
  }
  const std::int64_t g = std::gcd(num, den);
  return {num / g, den / g};
}

Rational Rational::Parse(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  if (s.empty()) Malformed(text);

  if (const auto slash = s.find('/'); slash != std::string_view::npos) {
    const std::int64_t num = ParseDigits(s.substr(0, slash), text);
    const std::int64_t den = ParseDigits(s.substr(slash + 1), text);
    if (den == 0) Malformed(text);
    return Make(num, den);
  }

  int exponent = 0;
  if (const auto e = s.find_first_of("eE"); e != std::string_view::npos) {
    std::string_view exp_text = s.substr(e + 1);
    bool negative = false;
    if (!exp_text.empty() && (exp_text[0] == '-' || exp_text[0] == '+')) {
      negative = exp_text[0] == '-';
      exp_text.remove_prefix(1);
    }
    const std::int64_t magnitude = ParseDigits(exp_text, text);
    if (magnitude > 40) Malformed(text);
    exponent = static_cast<int>(negative ? -magnitude : magnitude);
    s = s.substr(0, e);
  }

  std::string digits;
  int fraction_digits = 0;
  if (const auto dot = s.find('.'); dot != std::string_view::npos) {
    digits = std::string(s.substr(0, dot)) + std::string(s.substr(dot + 1));
    fraction_digits = static_cast<int>(s.size() - dot - 1);
    if (dot == 0 && fraction_digits == 0) Malformed(text);
  } else {
    digits = std::string(s);
  }
  // Trailing zeros carry no value; dropping them keeps den small.
  while (fraction_digits > 0 && digits.size() > 1 && digits.back() == '0') {
    digits.pop_back();
    --fraction_digits;
  }
  const std::int64_t mantissa = ParseDigits(digits, text);
  const int scale = exponent - fraction_digits;
  if (scale >= 0) {
    const std::int64_t p = Pow10(scale, text);
    if (mantissa != 0 && mantissa > kLimit / p) Malformed(text);
    return Make(mantissa * p, 1);
  }
  return Make(mantissa, Pow10(-scale, text));
}

std::string Rational::ToString() const {
  if (den == 1) return std::to_string(num);
  return std::to_string(num) + "/" + std::to_string(den);
}

}  // namespace bmfni
