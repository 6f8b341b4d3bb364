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

#include "bmfni/pareto.h"

#include <utility>

namespace bmfni {

std::vector<LabeledPoint> FilterNondominated(std::vector<LabeledPoint> points) {
  return FilterNondominatedBy(std::move(points), [](const LabeledPoint& p) {
    return std::make_pair(p.value.v1, p.value.v2);
  });
}

std::vector<LabeledPoint> MinkowskiSum(std::span<const LabeledPoint> a,
                                       std::span<const LabeledPoint> b) {
  std::vector<LabeledPoint> out;
  out.reserve(a.size() * b.size());
  for (const LabeledPoint& r : a) {
    for (const LabeledPoint& s : b) {
      const ValuePair sum{r.value.v1 + s.value.v1, r.value.v2 + s.value.v2};
      if (sum.v1 >= kValueCap || sum.v2 >= kValueCap) {
        throw Error(ErrorCode::kOverflow, "Minkowski sum exceeds the 2^60 cap");
      }
      out.push_back({sum, Strategy::Union(r.witness, s.witness)});
    }
  }
  return out;
}

std::vector<LabeledPoint> MinCombine(std::span<const LabeledPoint> a,
                                     std::span<const LabeledPoint> b) {
  std::vector<LabeledPoint> out;
  out.reserve(a.size() * b.size());
  for (const LabeledPoint& r : a) {
    for (const LabeledPoint& s : b) {
      out.push_back({{std::min(r.value.v1, s.value.v1),
                      std::min(r.value.v2, s.value.v2)},
                     Strategy::Union(r.witness, s.witness)});
    }
  }
  return out;
}

bool EpsDominates(const ValuePair& q, const ValuePair& p, const Rational& eps) {
  // q_i <= (1 + num/den) p_i  <=>  q_i * den <= p_i * (den + num).
  const __int128 den = eps.den;
  const __int128 scale = static_cast<__int128>(eps.den) + eps.num;
  return static_cast<__int128>(q.v1) * den <= static_cast<__int128>(p.v1) * scale &&
         static_cast<__int128>(q.v2) * den <= static_cast<__int128>(p.v2) * scale;
}

bool EpsCovers(std::span<const ValuePair> front, const ValuePair& p,
               const Rational& eps) {
  return std::any_of(front.begin(), front.end(), [&](const ValuePair& q) {
    return EpsDominates(q, p, eps);
  });
}

bool EpsCovers(std::span<const LabeledPoint> front, const ValuePair& p,
               const Rational& eps) {
  return std::any_of(front.begin(), front.end(), [&](const LabeledPoint& q) {
    return EpsDominates(q.value, p, eps);
  });
}

std::vector<ValuePair> Values(std::span<const LabeledPoint> points) {
  std::vector<ValuePair> out;
  out.reserve(points.size());
  for (const LabeledPoint& p : points) out.push_back(p.value);
  return out;
}

}  // namespace bmfni
