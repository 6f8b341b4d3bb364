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

// Pareto-set algebra on planar integer points under minimization.

#ifndef BMFNI_PARETO_H_
#define BMFNI_PARETO_H_

#include <algorithm>
#include <span>
#include <tuple>
#include <vector>

#include "bmfni/core_model.h"
#include "bmfni/rational.h"

namespace bmfni {

struct LabeledPoint {
  ValuePair value;
  Strategy witness;
  // Budget handed to the left child when the label was composed; -1 for
  // leaf labels and for labels not produced by a composition.
  int origin = -1;
};

// Keeps the minimal elements of `items` under the componentwise order on
// key(item) = pair of int64. Among equal keys the item with the
// lexicographically smallest witness survives. The result is sorted by first
// key component ascending and second strictly descending.
template <typename T, typename KeyFn>
std::vector<T> FilterNondominatedBy(std::vector<T> items, KeyFn key) {
  std::sort(items.begin(), items.end(), [&key](const T& a, const T& b) {
    const auto ka = key(a);
    const auto kb = key(b);
    if (ka != kb) return ka < kb;
    return a.witness < b.witness;
  });
  std::vector<T> out;
  out.reserve(items.size());
  for (T& item : items) {
    if (!out.empty() && key(item).second >= key(out.back()).second) continue;
    out.push_back(std::move(item));
  }
  return out;
}

std::vector<LabeledPoint> FilterNondominated(std::vector<LabeledPoint> points);

// All pairwise sums; witnesses are unions. |result| = |a| * |b|.
std::vector<LabeledPoint> MinkowskiSum(std::span<const LabeledPoint> a,
                                       std::span<const LabeledPoint> b);

// All pairwise componentwise minima; witnesses are unions.
std::vector<LabeledPoint> MinCombine(std::span<const LabeledPoint> a,
                                     std::span<const LabeledPoint> b);

// q ≦ (1 + eps) * p, compared exactly by cross-multiplication.
bool EpsDominates(const ValuePair& q, const ValuePair& p, const Rational& eps);

// True iff some q in `front` satisfies q ≦ (1 + eps) * p.
bool EpsCovers(std::span<const ValuePair> front, const ValuePair& p,
               const Rational& eps);
bool EpsCovers(std::span<const LabeledPoint> front, const ValuePair& p,
               const Rational& eps);

std::vector<ValuePair> Values(std::span<const LabeledPoint> points);

}  // namespace bmfni

#endif  // BMFNI_PARETO_H_
