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

#include "bmfni/exact_dp.h"

#include <algorithm>
#include <numeric>

#include "bmfni/parallel.h"

namespace bmfni {
namespace {

using Combine = std::vector<LabeledPoint> (*)(std::span<const LabeledPoint>,
                                             std::span<const LabeledPoint>);

BudgetSets ComposeSets(const BudgetSets& left, const BudgetSets& right,
                       Combine combine, int threads, std::int64_t* created) {
  if (left.size() != right.size() || left.empty()) {
    throw Error(ErrorCode::kInvalidArgument,
                "children must cover the same budget range");
  }
  const int count = static_cast<int>(left.size());
  BudgetSets out(count);
  std::vector<std::int64_t> formed(count, 0);
  ParallelFor(count, threads, [&](int x) {
    std::vector<LabeledPoint> candidates;
    for (int k = 0; k <= x; ++k) {
      std::vector<LabeledPoint> part = combine(left[k], right[x - k]);
      for (LabeledPoint& p : part) {
        p.origin = k;
        candidates.push_back(std::move(p));
      }
    }
    formed[x] = static_cast<std::int64_t>(candidates.size());
    out[x] = FilterNondominated(std::move(candidates));
  });
  if (created != nullptr) {
    *created += std::accumulate(formed.begin(), formed.end(), std::int64_t{0});
  }
  return out;
}

}  // namespace

BudgetSets LeafLabels(const Instance& instance, int arc, std::int64_t budget,
                      bool track_witnesses) {
  const Arc& a = instance.arcs.at(arc);
  const int m = track_witnesses ? instance.num_arcs() : 0;
  BudgetSets out(budget + 1);
  const LabeledPoint intact{{a.u1, a.u2}, Strategy(m)};
  LabeledPoint cut{{0, 0}, Strategy(m)};
  if (track_witnesses) cut.witness.Interdict(arc, a.cost);
  // With x >= c(a) both strategies are feasible. Filtering them keeps the
  // (0,0) label, and for a zero-capacity arc the empty witness.
  const std::vector<LabeledPoint> affordable = FilterNondominated({intact, cut});
  for (std::int64_t x = 0; x <= budget; ++x) {
    if (x < a.cost) {
      out[x] = {intact};
    } else {
      out[x] = affordable;
    }
  }
  return out;
}

BudgetSets ParallelCompose(const BudgetSets& left, const BudgetSets& right,
                           int threads, std::int64_t* created) {
  return ComposeSets(left, right, &MinkowskiSum, threads, created);
}

BudgetSets SeriesCompose(const BudgetSets& left, const BudgetSets& right,
                         int threads, std::int64_t* created) {
  return ComposeSets(left, right, &MinCombine, threads, created);
}

ExactResult SolveExact(const Instance& instance, const ExactOptions& options) {
  ValidateOrThrow(instance);
  const SpTree tree = TreeOf(instance);
  const std::int64_t budget = std::min(instance.budget, instance.total_cost());

  ExactResult result;
  result.stats.budget_used = budget;
  result.stats.set_sizes.resize(tree.size());

  // Post-order storage means children are always computed first. Sets of a
  // node are released once its parent has consumed them unless the full
  // table is requested.
  std::vector<BudgetSets> sets(tree.size());
  for (int v = 0; v < tree.size(); ++v) {
    const SpTree::Node& node = tree.node(v);
    switch (node.kind) {
      case SpTree::Kind::kPrimitive:
        sets[v] = LeafLabels(instance, node.arc, budget,
                             options.track_witnesses);
        result.stats.labels_created += budget + 1;
        break;
      case SpTree::Kind::kParallel:
        sets[v] = ParallelCompose(sets[node.left], sets[node.right],
                                  options.threads,
                                  &result.stats.labels_created);
        break;
      case SpTree::Kind::kSeries:
        sets[v] = SeriesCompose(sets[node.left], sets[node.right],
                                options.threads, &result.stats.labels_created);
        break;
    }
    auto& sizes = result.stats.set_sizes[v];
    for (const auto& s : sets[v]) sizes.push_back(static_cast<int>(s.size()));
    if (!options.keep_table && node.kind != SpTree::Kind::kPrimitive) {
      BudgetSets().swap(sets[node.left]);
      BudgetSets().swap(sets[node.right]);
    }
  }
  result.front = sets[tree.root()].back();
  if (options.keep_table) {
    result.table = LabelTable{budget, std::move(sets)};
  }
  return result;
}

bool DecisionCheck(const Instance& instance, const ValuePair& threshold,
                   int threads) {
  ExactOptions options;
  options.threads = threads;
  options.track_witnesses = false;
  const ExactResult result = SolveExact(instance, options);
  return std::any_of(result.front.begin(), result.front.end(),
                     [&](const LabeledPoint& p) {
                       return WeaklyLeq(p.value, threshold);
                     });
}

}  // namespace bmfni
