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

#include "bmfni/knapsack_bridge.h"

#include <algorithm>

#include "bmfni/pareto.h"

namespace bmfni {
namespace {

bool IsParallelGraph(const Instance& instance) {
  if (instance.tree) {
    for (const SpTree::Node& node : instance.tree->nodes()) {
      if (node.kind == SpTree::Kind::kSeries) return false;
    }
    return true;
  }
  if (!instance.edges) return false;
  const EdgeGraph& g = *instance.edges;
  return std::all_of(g.edges.begin(), g.edges.end(), [&](const auto& e) {
    return e.tail == g.source && e.head == g.sink;
  });
}

}  // namespace

BiKnapsackInstance ParallelToKnapsack(const Instance& instance) {
  ValidateOrThrow(instance);
  if (!IsParallelGraph(instance)) {
    throw Error(ErrorCode::kNotParallelGraph,
                "knapsack equivalence needs a graph of parallel s-t arcs");
  }
  BiKnapsackInstance out;
  out.capacity = instance.budget;
  for (const Arc& a : instance.arcs) out.items.push_back({a.u1, a.u2, a.cost});
  return out;
}

std::vector<KnapsackPoint> SolveBiKnapsack(const BiKnapsackInstance& instance) {
  const int n = static_cast<int>(instance.items.size());
  if (n == 0) throw Error(ErrorCode::kInvalidArgument, "no knapsack items");
  if (instance.capacity < 0) {
    throw Error(ErrorCode::kInvalidArgument, "negative knapsack capacity");
  }
  std::int64_t total_weight = 0;
  for (const BiKnapsackItem& item : instance.items) {
    if (item.w < 1) {
      throw Error(ErrorCode::kInvalidArgument, "knapsack weights must be >= 1");
    }
    if (item.p1 < 0 || item.p2 < 0) {
      throw Error(ErrorCode::kInvalidArgument,
                  "knapsack profits must be nonnegative");
    }
    total_weight += item.w;
  }
  const std::int64_t capacity = std::min(instance.capacity, total_weight);

  // Maximization through negated keys: the minimal negated pairs are the
  // maximal profit pairs.
  auto maximal = [](std::vector<KnapsackPoint> points) {
    return FilterNondominatedBy(std::move(points), [](const KnapsackPoint& p) {
      return std::make_pair(-p.profit.v1, -p.profit.v2);
    });
  };

  // best[w]: efficient profit pairs over the items seen so far with total
  // weight at most w.
  std::vector<std::vector<KnapsackPoint>> best(
      capacity + 1, {KnapsackPoint{{0, 0}, Strategy(n)}});
  for (int i = 0; i < n; ++i) {
    const BiKnapsackItem& item = instance.items[i];
    std::vector<std::vector<KnapsackPoint>> next(capacity + 1);
    for (std::int64_t w = 0; w <= capacity; ++w) {
      std::vector<KnapsackPoint> candidates = best[w];
      if (w >= item.w) {
        for (const KnapsackPoint& p : best[w - item.w]) {
          KnapsackPoint packed = p;
          packed.profit.v1 += item.p1;
          packed.profit.v2 += item.p2;
          packed.witness.Interdict(i, item.w);
          candidates.push_back(std::move(packed));
        }
      }
      next[w] = maximal(std::move(candidates));
    }
    best = std::move(next);
  }
  std::vector<KnapsackPoint> front = std::move(best[capacity]);
  std::reverse(front.begin(), front.end());
  return front;
}

ReducedInstance KnapsackToBmfni(const KnapsackDecisionInstance& knapsack) {
  const int n = static_cast<int>(knapsack.items.size());
  if (n == 0) throw Error(ErrorCode::kInvalidArgument, "no knapsack items");
  if (knapsack.profit_target < 1 || knapsack.weight_limit < 1) {
    throw Error(ErrorCode::kInvalidArgument, "P and W must be positive");
  }
  std::int64_t p_max = 0;
  for (const KnapsackItem& item : knapsack.items) {
    if (item.p < 1 || item.w < 1) {
      throw Error(ErrorCode::kInvalidArgument,
                  "knapsack profits and weights must be positive");
    }
    p_max = std::max(p_max, item.p);
  }

  ReducedInstance out;
  Instance& g = out.instance;
  std::string expression = "P(";
  for (int i = 0; i < n; ++i) {
    const KnapsackItem& item = knapsack.items[i];
    g.arcs.push_back({"a" + std::to_string(i + 1), p_max - item.p, item.w, 1});
  }
  for (int i = 0; i < n; ++i) {
    g.arcs.push_back({"b" + std::to_string(i + 1), p_max, 0, 1});
  }
  for (int i = 0; i < 2 * n; ++i) {
    if (i > 0) expression += ",";
    expression += "arc(" + g.arcs[i].id + ")";
  }
  expression += ")";
  g.tree = ParseSpExpression(expression).tree;
  g.budget = n;
  out.threshold = {n * p_max - knapsack.profit_target, knapsack.weight_limit};
  return out;
}

bool KnapsackDecisionBruteForce(const KnapsackDecisionInstance& knapsack) {
  const int n = static_cast<int>(knapsack.items.size());
  if (n > 30) {
    throw Error(ErrorCode::kTooLarge, "subset enumeration limited to 30 items");
  }
  for (std::uint64_t subset = 0; subset < (std::uint64_t{1} << n); ++subset) {
    std::int64_t profit = 0;
    std::int64_t weight = 0;
    for (int i = 0; i < n; ++i) {
      if ((subset >> i) & 1u) {
        profit += knapsack.items[i].p;
        weight += knapsack.items[i].w;
      }
    }
    if (weight <= knapsack.weight_limit && profit >= knapsack.profit_target) {
      return true;
    }
  }
  return false;
}

}  // namespace bmfni
