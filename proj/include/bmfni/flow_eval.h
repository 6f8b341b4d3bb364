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

// Maximum-flow values of interdicted graphs. Two independent routes: the
// structural recursion over a decomposition tree (a primitive carries its
// capacity unless interdicted, series takes the minimum, parallel the sum),
// and a shortest-augmenting-path max-flow on a plain arc list.

#ifndef BMFNI_FLOW_EVAL_H_
#define BMFNI_FLOW_EVAL_H_

#include <cstdint>
#include <span>
#include <vector>

#include "bmfni/core_model.h"
#include "bmfni/sp_tree.h"

namespace bmfni {

// VAL(H(strategy), u^index) for the subgraph H rooted at `node`.
std::int64_t SpValue(const SpTree& tree, int node, const Instance& instance,
                     const Strategy& strategy, CapacityIndex index);

ValuePair SpValuePair(const SpTree& tree, int node, const Instance& instance,
                      const Strategy& strategy);

inline ValuePair SpValuePair(const Instance& instance,
                             const Strategy& strategy) {
  return SpValuePair(*instance.tree, instance.tree->root(), instance,
                     strategy);
}

// Edmonds-Karp max-flow from graph.source to graph.sink. `capacity` is
// indexed by arc index (Edge::arc). Throws kInvalidArgument if a terminal
// is missing or a capacity is negative.
std::int64_t GenericMaxFlow(const EdgeGraph& graph,
                            std::span<const std::int64_t> capacity);

// Reusable max-flow on a fixed graph; only capacities change between calls.
// Not thread-safe; use one per thread.
class MaxFlowSolver {
 public:
  explicit MaxFlowSolver(const EdgeGraph& graph);

  std::int64_t Solve(std::span<const std::int64_t> capacity);

 private:
  struct ResidualArc {
    int head;
    int reverse;
    std::int64_t residual;
  };

  int source_;
  int sink_;
  int num_arcs_ = 0;
  std::vector<std::vector<ResidualArc>> adjacency_;
  // Position of each input edge's forward residual arc.
  std::vector<std::pair<int, int>> forward_;
  std::vector<int> edge_arc_;
  std::vector<std::pair<int, int>> parent_;
};

// Max-flow value pair of the instance's edge graph (or its expanded tree)
// with the strategy's arcs set to capacity 0.
ValuePair GenericValuePair(const EdgeGraph& graph, const Instance& instance,
                           const Strategy& strategy);

}  // namespace bmfni

#endif  // BMFNI_FLOW_EVAL_H_
