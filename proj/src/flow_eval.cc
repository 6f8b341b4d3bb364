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

#include "bmfni/flow_eval.h"

#include <algorithm>
#include <limits>

namespace bmfni {

std::int64_t SpValue(const SpTree& tree, int node, const Instance& instance,
                     const Strategy& strategy, CapacityIndex index) {
  // Post-order storage: the subtree is a contiguous range ending at `node`.
  const int begin = tree.subtree_begin(node);
  std::vector<std::int64_t> value(node - begin + 1);
  for (int v = begin; v <= node; ++v) {
    const SpTree::Node& n = tree.node(v);
    std::int64_t& out = value[v - begin];
    switch (n.kind) {
      case SpTree::Kind::kPrimitive:
        out = strategy.interdicts(n.arc) ? 0 : instance.capacity(n.arc, index);
        break;
      case SpTree::Kind::kSeries:
        out = std::min(value[n.left - begin], value[n.right - begin]);
        break;
      case SpTree::Kind::kParallel:
        out = value[n.left - begin] + value[n.right - begin];
        break;
    }
  }
  return value.back();
}

ValuePair SpValuePair(const SpTree& tree, int node, const Instance& instance,
                      const Strategy& strategy) {
  return {SpValue(tree, node, instance, strategy, CapacityIndex::kFirst),
          SpValue(tree, node, instance, strategy, CapacityIndex::kSecond)};
}

MaxFlowSolver::MaxFlowSolver(const EdgeGraph& graph)
    : source_(graph.source), sink_(graph.sink) {
  const int n = graph.num_vertices();
  if (source_ < 0 || source_ >= n || sink_ < 0 || sink_ >= n) {
    throw Error(ErrorCode::kInvalidArgument, "source or sink missing");
  }
  adjacency_.resize(n);
  parent_.resize(n);
  for (const auto& e : graph.edges) {
    if (e.tail < 0 || e.tail >= n || e.head < 0 || e.head >= n) {
      throw Error(ErrorCode::kInvalidArgument,
                  "edge references an unknown vertex");
    }
    const int fwd = static_cast<int>(adjacency_[e.tail].size());
    const int rev = static_cast<int>(adjacency_[e.head].size()) +
                    (e.tail == e.head ? 1 : 0);
    adjacency_[e.tail].push_back({e.head, rev, 0});
    adjacency_[e.head].push_back({e.tail, fwd, 0});
    forward_.push_back({e.tail, fwd});
    edge_arc_.push_back(e.arc);
    num_arcs_ = std::max(num_arcs_, e.arc + 1);
  }
}

std::int64_t MaxFlowSolver::Solve(std::span<const std::int64_t> capacity) {
  if (static_cast<int>(capacity.size()) < num_arcs_) {
    throw Error(ErrorCode::kInvalidArgument, "capacity vector too short");
  }
  for (auto& arcs : adjacency_) {
    for (auto& a : arcs) a.residual = 0;
  }
  for (std::size_t i = 0; i < forward_.size(); ++i) {
    const std::int64_t c = capacity[edge_arc_[i]];
    if (c < 0) throw Error(ErrorCode::kInvalidArgument, "negative capacity");
    auto [tail, pos] = forward_[i];
    adjacency_[tail][pos].residual = c;
  }
  if (source_ == sink_) return 0;

  std::int64_t flow = 0;
  std::vector<int> queue;
  while (true) {
    std::fill(parent_.begin(), parent_.end(), std::make_pair(-1, -1));
    parent_[source_] = {source_, -1};
    queue.assign(1, source_);
    for (std::size_t i = 0; i < queue.size() && parent_[sink_].first < 0;
         ++i) {
      const int v = queue[i];
      for (int k = 0; k < static_cast<int>(adjacency_[v].size()); ++k) {
        const ResidualArc& a = adjacency_[v][k];
        if (a.residual > 0 && parent_[a.head].first < 0) {
          parent_[a.head] = {v, k};
          queue.push_back(a.head);
        }
      }
    }
    if (parent_[sink_].first < 0) break;

    std::int64_t bottleneck = std::numeric_limits<std::int64_t>::max();
    for (int v = sink_; v != source_; v = parent_[v].first) {
      auto [u, k] = parent_[v];
      bottleneck = std::min(bottleneck, adjacency_[u][k].residual);
    }
    for (int v = sink_; v != source_; v = parent_[v].first) {
      auto [u, k] = parent_[v];
      ResidualArc& a = adjacency_[u][k];
      a.residual -= bottleneck;
      adjacency_[a.head][a.reverse].residual += bottleneck;
    }
    flow += bottleneck;
  }
  return flow;
}

std::int64_t GenericMaxFlow(const EdgeGraph& graph,
                            std::span<const std::int64_t> capacity) {
  return MaxFlowSolver(graph).Solve(capacity);
}

ValuePair GenericValuePair(const EdgeGraph& graph, const Instance& instance,
                           const Strategy& strategy) {
  const int m = instance.num_arcs();
  std::vector<std::int64_t> c1(m), c2(m);
  for (int a = 0; a < m; ++a) {
    const bool cut = strategy.interdicts(a);
    c1[a] = cut ? 0 : instance.arcs[a].u1;
    c2[a] = cut ? 0 : instance.arcs[a].u2;
  }
  MaxFlowSolver solver(graph);
  return {solver.Solve(c1), solver.Solve(c2)};
}

}  // namespace bmfni
