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

#include "bmfni/fptas.h"

#include <algorithm>
#include <numeric>

#include <boost/multiprecision/cpp_int.hpp>

#include "bmfni/parallel.h"

namespace bmfni {
namespace {

using boost::multiprecision::cpp_int;

// Fixed-point fraction bits for the interval bounds on (1+eps)^k. The
// bounds drift by at most one unit per step, far below one integer.
constexpr unsigned kFractionBits = 128;

std::int64_t Saturate(const cpp_int& v, std::int64_t cap) {
  return v > cap ? cap : static_cast<std::int64_t>(v);
}

}  // namespace

RoundingScale::RoundingScale(const Rational& eps, std::int64_t max_value)
    : eps_(eps), max_value_(std::max<std::int64_t>(max_value, 1)) {
  if (!eps.positive() || eps.den <= 0) {
    throw Error(ErrorCode::kInvalidArgument, "epsilon must be positive");
  }
  const std::int64_t cap = max_value_ + 1;
  const cpp_int base = cpp_int(eps.den) + eps.num;
  const cpp_int den = eps.den;
  const cpp_int one = cpp_int(1) << kFractionBits;
  cpp_int lo = one;
  cpp_int hi = one;
  ceil_power_.push_back(1);
  floor_power_.push_back(1);
  for (int k = 1; floor_power_.back() <= max_value_; ++k) {
    if (k > kMaxExponent) {
      throw Error(ErrorCode::kInvalidArgument,
                  "epsilon too small: more than 2^22 rounding buckets");
    }
    lo = lo * base / den;                  // rounds down
    hi = (hi * base + den - 1) / den;      // rounds up
    cpp_int floor_lo = lo >> kFractionBits;
    cpp_int floor_hi = hi >> kFractionBits;
    cpp_int ceil_lo = (lo + one - 1) >> kFractionBits;
    cpp_int ceil_hi = (hi + one - 1) >> kFractionBits;
    if (floor_lo != floor_hi || ceil_lo != ceil_hi) {
      // Power too close to an integer for the bounds to decide; compute it
      // exactly.
      const cpp_int num_k = boost::multiprecision::pow(base, k);
      const cpp_int den_k = boost::multiprecision::pow(den, k);
      floor_lo = num_k / den_k;
      ceil_lo = (num_k + den_k - 1) / den_k;
      lo = (num_k << kFractionBits) / den_k;
      hi = ((num_k << kFractionBits) + den_k - 1) / den_k;
    }
    floor_power_.push_back(Saturate(floor_lo, cap));
    ceil_power_.push_back(Saturate(ceil_lo, cap));
  }
}

int RoundingScale::Exponent(std::int64_t v) const {
  if (v < 0 || v > max_value_) {
    throw Error(ErrorCode::kInvalidArgument, "value outside rounding range");
  }
  if (v == 0) return kZeroExponent;
  // For integer v: (1+eps)^k <= v iff ceil((1+eps)^k) <= v.
  const auto it = std::upper_bound(ceil_power_.begin(), ceil_power_.end(), v);
  return static_cast<int>(it - ceil_power_.begin()) - 1;
}

int RoundingScale::CeilLog(std::int64_t v) const {
  if (v < 1 || v > max_value_) {
    throw Error(ErrorCode::kInvalidArgument, "value outside rounding range");
  }
  // (1+eps)^k >= v iff floor((1+eps)^k) >= v.
  const auto it = std::lower_bound(floor_power_.begin(), floor_power_.end(), v);
  return static_cast<int>(it - floor_power_.begin());
}

int RoundDown(std::int64_t v, const Rational& eps) {
  return RoundingScale(eps, v).Exponent(v);
}

namespace {

RoundedLabel MakeLabel(const ValuePair& value, Strategy witness,
                       const RoundingScale& scale) {
  return {scale.Exponent(value.v1), scale.Exponent(value.v2), value,
          std::move(witness)};
}

std::vector<RoundedLabel> FilterRounded(std::vector<RoundedLabel> labels) {
  return FilterNondominatedBy(std::move(labels), [](const RoundedLabel& l) {
    return std::make_pair<std::int64_t, std::int64_t>(l.e1, l.e2);
  });
}

template <typename ValueOp>
RoundedSets ComposeRounded(const RoundedSets& left, const RoundedSets& right,
                           const RoundingScale& scale, int threads,
                           std::int64_t* created, ValueOp op) {
  if (left.size() != right.size() || left.empty()) {
    throw Error(ErrorCode::kInvalidArgument,
                "children must cover the same budget range");
  }
  const int count = static_cast<int>(left.size());
  RoundedSets out(count);
  std::vector<std::int64_t> formed(count, 0);
  ParallelFor(count, threads, [&](int x) {
    std::vector<RoundedLabel> candidates;
    for (int k = 0; k <= x; ++k) {
      for (const RoundedLabel& r : left[k]) {
        for (const RoundedLabel& s : right[x - k]) {
          // Children own disjoint arc sets; Union enforces it.
          candidates.push_back(MakeLabel(op(r.true_pair, s.true_pair),
                                         Strategy::Union(r.witness, s.witness),
                                         scale));
        }
      }
    }
    formed[x] = static_cast<std::int64_t>(candidates.size());
    out[x] = FilterRounded(std::move(candidates));
  });
  if (created != nullptr) {
    *created += std::accumulate(formed.begin(), formed.end(), std::int64_t{0});
  }
  return out;
}

}  // namespace

RoundedSets ApproxLeaf(const Instance& instance, int arc, std::int64_t budget,
                       const RoundingScale& scale) {
  const Arc& a = instance.arcs.at(arc);
  if (a.cost != 1) {
    throw Error(ErrorCode::kNonUnitCosts,
                "approximation requires unit interdiction costs (arc '" +
                    a.id + "')");
  }
  RoundedSets out(budget + 1);
  out[0] = {MakeLabel({a.u1, a.u2}, Strategy(instance.num_arcs()), scale)};
  Strategy cut(instance.num_arcs());
  cut.Interdict(arc, a.cost);
  for (std::int64_t x = 1; x <= budget; ++x) {
    out[x] = {MakeLabel({0, 0}, cut, scale)};
  }
  return out;
}

RoundedSets ApproxParallel(const RoundedSets& left, const RoundedSets& right,
                           const RoundingScale& scale, int threads,
                           std::int64_t* created) {
  return ComposeRounded(left, right, scale, threads, created,
                        [](const ValuePair& r, const ValuePair& s) {
                          return ValuePair{r.v1 + s.v1, r.v2 + s.v2};
                        });
}

RoundedSets ApproxSeries(const RoundedSets& left, const RoundedSets& right,
                         const RoundingScale& scale, int threads,
                         std::int64_t* created) {
  return ComposeRounded(left, right, scale, threads, created,
                        [](const ValuePair& r, const ValuePair& s) {
                          return ValuePair{std::min(r.v1, s.v1),
                                           std::min(r.v2, s.v2)};
                        });
}

std::vector<LabeledPoint> ExtractFront(const std::vector<RoundedLabel>& root) {
  std::vector<LabeledPoint> points;
  points.reserve(root.size());
  for (const RoundedLabel& l : root) points.push_back({l.true_pair, l.witness});
  return FilterNondominated(std::move(points));
}

FptasResult SolveFptas(const Instance& instance, const Rational& eps,
                       const FptasOptions& options) {
  ValidateOrThrow(instance);
  if (!eps.positive()) {
    throw Error(ErrorCode::kInvalidArgument, "epsilon must be positive");
  }
  if (!instance.unit_costs()) {
    throw Error(ErrorCode::kNonUnitCosts,
                "approximation requires unit interdiction costs");
  }
  const SpTree tree = TreeOf(instance);
  const std::int64_t m = instance.num_arcs();
  const std::int64_t budget = std::min(instance.budget, m);
  const std::int64_t range = m * instance.max_u();
  const RoundingScale scale(eps, range);

  FptasResult result;
  result.stats.budget_used = budget;
  result.stats.bucket_bound = range > 0 ? scale.CeilLog(range) : 0;
  result.stats.set_sizes.resize(tree.size());

  std::vector<RoundedSets> sets(tree.size());
  for (int v = 0; v < tree.size(); ++v) {
    const SpTree::Node& node = tree.node(v);
    switch (node.kind) {
      case SpTree::Kind::kPrimitive:
        sets[v] = ApproxLeaf(instance, node.arc, budget, scale);
        result.stats.labels_created += budget + 1;
        break;
      case SpTree::Kind::kParallel:
        sets[v] = ApproxParallel(sets[node.left], sets[node.right], scale,
                                 options.threads,
                                 &result.stats.labels_created);
        break;
      case SpTree::Kind::kSeries:
        sets[v] = ApproxSeries(sets[node.left], sets[node.right], scale,
                               options.threads, &result.stats.labels_created);
        break;
    }
    auto& sizes = result.stats.set_sizes[v];
    for (const auto& s : sets[v]) sizes.push_back(static_cast<int>(s.size()));
    if (!options.keep_table && node.kind != SpTree::Kind::kPrimitive) {
      RoundedSets().swap(sets[node.left]);
      RoundedSets().swap(sets[node.right]);
    }
  }
  const std::vector<RoundedLabel>& root = sets[tree.root()].back();
  result.front = ExtractFront(root);
  result.stats.root_rounded_size = static_cast<int>(root.size());
  result.stats.front_size = static_cast<int>(result.front.size());
  if (options.keep_table) {
    result.table = ApproxTable{budget, std::move(sets)};
  }
  return result;
}

}  // namespace bmfni
