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

// Exact nondominated front by dynamic programming over the decomposition
// tree. For every tree node H and budget x the solver keeps L(H, x), the
// nondominated value pairs reachable in the subgraph H with interdiction
// cost at most x:
//
//   leaf a:      {u(a)} for x < c(a), {(0,0)} for x >= c(a)
//   parallel:    filter( U_k L(H1, k) (+) L(H2, x - k) )   (Minkowski sum)
//   series:      filter( U_k L(H1, k) (.) L(H2, x - k) )   (componentwise min)
//
// Each label carries a witness strategy attaining it.

#ifndef BMFNI_EXACT_DP_H_
#define BMFNI_EXACT_DP_H_

#include <cstdint>
#include <optional>
#include <vector>

#include "bmfni/core_model.h"
#include "bmfni/pareto.h"

namespace bmfni {

// Label sets indexed by budget 0..B.
using BudgetSets = std::vector<std::vector<LabeledPoint>>;

struct LabelTable {
  std::int64_t budget = 0;
  std::vector<BudgetSets> sets;  // indexed by tree node
};

struct ExactOptions {
  int threads = 1;
  bool keep_table = false;
  // Points-only mode: labels carry empty witnesses.
  bool track_witnesses = true;
};

struct ExactStats {
  std::int64_t budget_used = 0;  // min(B, total cost)
  std::int64_t labels_created = 0;
  // |L(H, x)| per tree node and budget.
  std::vector<std::vector<int>> set_sizes;
};

struct ExactResult {
  std::vector<LabeledPoint> front;  // L(G, B)
  ExactStats stats;
  std::optional<LabelTable> table;
};

BudgetSets LeafLabels(const Instance& instance, int arc, std::int64_t budget,
                      bool track_witnesses = true);

// `created`, when non-null, accumulates the number of candidate labels
// formed before filtering.
BudgetSets ParallelCompose(const BudgetSets& left, const BudgetSets& right,
                           int threads = 1,
                           std::int64_t* created = nullptr);
BudgetSets SeriesCompose(const BudgetSets& left, const BudgetSets& right,
                         int threads = 1, std::int64_t* created = nullptr);

// Recognizes the graph first when the instance has only an edge list.
ExactResult SolveExact(const Instance& instance,
                       const ExactOptions& options = {});

// True iff some nondominated point p satisfies p ≦ threshold.
bool DecisionCheck(const Instance& instance, const ValuePair& threshold,
                   int threads = 1);

}  // namespace bmfni

#endif  // BMFNI_EXACT_DP_H_
