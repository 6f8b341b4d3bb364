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

// Approximation scheme for unit interdiction costs.
//
// The value range [0, mU] is split into the buckets [0, 1), [1, 1+eps),
// [(1+eps), (1+eps)^2), ... and every label stores the bucket index of each
// of its two flow values instead of the values themselves. Labels are
// composed exactly like the exact program does, re-bucketed after every
// composition, and filtered for dominance on bucket indices, which bounds
// each set by the number of buckets. The final front re-evaluates the
// surviving witnesses exactly.
//
// Each label also carries the exact value pair of its witness on the
// label's subgraph, so re-bucketing after a composition is O(1) instead of a
// fresh max-flow computation.

#ifndef BMFNI_FPTAS_H_
#define BMFNI_FPTAS_H_

#include <cstdint>
#include <optional>
#include <vector>

#include "bmfni/core_model.h"
#include "bmfni/pareto.h"
#include "bmfni/rational.h"

namespace bmfni {

// Bucket index of values in [0, 1).
inline constexpr int kZeroExponent = -1;

// Exact bucket boundaries ceil((1+eps)^k) and floor((1+eps)^k) for all k up
// to the first power exceeding `max_value`.
class RoundingScale {
 public:
  // Throws kInvalidArgument if eps <= 0 or the scale would need more than
  // kMaxExponent buckets.
  RoundingScale(const Rational& eps, std::int64_t max_value);

  static constexpr int kMaxExponent = 1 << 22;

  const Rational& eps() const { return eps_; }
  std::int64_t max_value() const { return max_value_; }

  // Largest k with (1+eps)^k <= v, or kZeroExponent for v == 0. Requires
  // 0 <= v <= max_value().
  int Exponent(std::int64_t v) const;

  // Smallest k >= 0 with (1+eps)^k >= v, for 1 <= v <= max_value().
  int CeilLog(std::int64_t v) const;

  // Number of exponents k >= 0 with (1+eps)^k <= max_value().
  int num_exponents() const { return static_cast<int>(ceil_power_.size()) - 1; }

 private:
  Rational eps_;
  std::int64_t max_value_;
  // ceil_power_[k] = ceil((1+eps)^k), floor_power_[k] = floor((1+eps)^k),
  // for k = 0 .. K where K is the first index with floor > max_value
  // (values saturate at max_value + 1).
  std::vector<std::int64_t> ceil_power_;
  std::vector<std::int64_t> floor_power_;
};

// RoundingScale(eps, v).Exponent(v).
int RoundDown(std::int64_t v, const Rational& eps);

struct RoundedLabel {
  int e1 = kZeroExponent;
  int e2 = kZeroExponent;
  ValuePair true_pair;
  Strategy witness;
};

using RoundedSets = std::vector<std::vector<RoundedLabel>>;

struct ApproxTable {
  std::int64_t budget = 0;
  std::vector<RoundedSets> sets;  // A_eps(H, x) indexed by tree node
};

struct FptasOptions {
  int threads = 1;
  bool keep_table = false;
};

struct FptasStats {
  std::int64_t budget_used = 0;  // min(B, m)
  std::int64_t labels_created = 0;
  // ceil(log_{1+eps}(mU)); 0 when mU == 0.
  int bucket_bound = 0;
  std::vector<std::vector<int>> set_sizes;  // |A_eps(H, x)|
  int root_rounded_size = 0;                // |A_eps(G, B)|
  int front_size = 0;                       // |L_eps(G, B)|
};

struct FptasResult {
  std::vector<LabeledPoint> front;  // L_eps(G, B)
  FptasStats stats;
  std::optional<ApproxTable> table;
};

// Throws kNonUnitCosts unless c(arc) == 1.
RoundedSets ApproxLeaf(const Instance& instance, int arc, std::int64_t budget,
                       const RoundingScale& scale);
RoundedSets ApproxParallel(const RoundedSets& left, const RoundedSets& right,
                           const RoundingScale& scale, int threads = 1,
                           std::int64_t* created = nullptr);
RoundedSets ApproxSeries(const RoundedSets& left, const RoundedSets& right,
                         const RoundingScale& scale, int threads = 1,
                         std::int64_t* created = nullptr);

// Exact values of the surviving witnesses, dominance filtered.
std::vector<LabeledPoint> ExtractFront(const std::vector<RoundedLabel>& root);

// Throws kNonUnitCosts, or kInvalidArgument for eps <= 0.
FptasResult SolveFptas(const Instance& instance, const Rational& eps,
                       const FptasOptions& options = {});

}  // namespace bmfni

#endif  // BMFNI_FPTAS_H_
