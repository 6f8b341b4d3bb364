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

#ifndef BMFNI_RATIONAL_H_
#define BMFNI_RATIONAL_H_

#include <cstdint>
#include <string>
#include <string_view>

namespace bmfni {

// Positive rational num/den in lowest terms. Used for the approximation
// parameter so that (1+eps) comparisons stay exact.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  // Reduces to lowest terms. Throws kInvalidArgument unless num >= 0 and
  // den > 0.
  static Rational Make(std::int64_t num, std::int64_t den);

  // Accepts "0.25", "3", "1e-2", "2.5E1" or "1/3". Throws kInvalidArgument
  // on malformed text or values that do not fit 64-bit num/den.
  static Rational Parse(std::string_view text);

  bool positive() const { return num > 0; }
  double ToDouble() const { return static_cast<double>(num) / den; }
  // Canonical text: "num/den", or "num" when den == 1.
  std::string ToString() const;

  friend bool operator==(const Rational&, const Rational&) = default;
};

}  // namespace bmfni

#endif  // BMFNI_RATIONAL_H_
