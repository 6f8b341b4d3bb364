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

// Knapsack bridges.
//
// On a graph whose arcs all run from s to t, interdicting a set of arcs
// removes exactly their capacities from both flow values, so the efficient
// strategies are the efficient solutions of the biobjective knapsack with
// profits u(a), weights c(a) and capacity B, and VAL(G(x), u) = v(e) - v(x).
//
// In the other direction a knapsack decision instance (profits p, weights w,
// targets P, W) maps to a parallel graph with arcs a_i: (p_max - p_i, w_i)
// and b_i: (p_max, 0), unit costs, budget n and threshold
// K = (n p_max - P, W); a knapsack solution exists iff some strategy has
// VAL ≦ K.

#ifndef BMFNI_KNAPSACK_BRIDGE_H_
#define BMFNI_KNAPSACK_BRIDGE_H_

#include <cstdint>
#include <vector>

#include "bmfni/core_model.h"

namespace bmfni {

struct BiKnapsackItem {
  std::int64_t p1 = 0;
  std::int64_t p2 = 0;
  std::int64_t w = 1;
};

struct BiKnapsackInstance {
  std::vector<BiKnapsackItem> items;
  std::int64_t capacity = 0;
};

struct KnapsackItem {
  std::int64_t p = 1;
  std::int64_t w = 1;
};

struct KnapsackDecisionInstance {
  std::vector<KnapsackItem> items;
  std::int64_t profit_target = 1;  // P
  std::int64_t weight_limit = 1;   // W
};

// A maximal profit pair with its item vector (bit i set = item i packed).
struct KnapsackPoint {
  ValuePair profit;
  Strategy witness;
};

// Throws kNotParallelGraph unless every arc runs from s to t.
BiKnapsackInstance ParallelToKnapsack(const Instance& instance);

// All nondominated (maximization) profit pairs, sorted by first profit
// ascending. Among equal profits the lexicographically smallest item vector
// is reported. Throws kInvalidArgument on weights < 1 or empty item lists.
std::vector<KnapsackPoint> SolveBiKnapsack(const BiKnapsackInstance& instance);

struct ReducedInstance {
  Instance instance;
  ValuePair threshold;
};

// Throws kInvalidArgument unless all profits, weights, P and W are >= 1.
ReducedInstance KnapsackToBmfni(const KnapsackDecisionInstance& knapsack);

// Subset enumeration; the reference answer for the reduction.
bool KnapsackDecisionBruteForce(const KnapsackDecisionInstance& knapsack);

}  // namespace bmfni

#endif  // BMFNI_KNAPSACK_BRIDGE_H_
