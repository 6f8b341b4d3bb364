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

#include "bmfni/generator.h"

#include <limits>
#include <string>
#include <vector>

namespace bmfni {

std::int64_t Rng::Uniform(std::int64_t lo, std::int64_t hi) {
  if (lo > hi) throw Error(ErrorCode::kInvalidArgument, "empty range");
  const std::uint64_t span =
      static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1;
  if (span == 0) return static_cast<std::int64_t>(Next());  // full range
  // Accept x < floor(2^64 / span) * span = 2^64 - (2^64 mod span).
  constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
  const std::uint64_t rem = (kMax % span + 1) % span;
  std::uint64_t x = Next();
  while (rem != 0 && x > kMax - rem) x = Next();
  return lo + static_cast<std::int64_t>(x % span);
}

namespace {

// Builds the subtree over leaves [first, first + count) into `nodes`.
int BuildShape(int first, int count, bool parallel_only, Rng& rng,
               std::vector<SpTree::Node>* nodes) {
  SpTree::Node node;
  if (count == 1) {
    node.kind = SpTree::Kind::kPrimitive;
    node.arc = first;
    nodes->push_back(node);
    return static_cast<int>(nodes->size()) - 1;
  }
  const int left_count = static_cast<int>(rng.Uniform(1, count - 1));
  node.kind = parallel_only || !rng.Coin() ? SpTree::Kind::kParallel
                                           : SpTree::Kind::kSeries;
  node.left = BuildShape(first, left_count, parallel_only, rng, nodes);
  node.right =
      BuildShape(first + left_count, count - left_count, parallel_only, rng,
                 nodes);
  nodes->push_back(node);
  return static_cast<int>(nodes->size()) - 1;
}

}  // namespace

Instance GenerateSp(const SpGenParams& params) {
  if (params.arcs < 1 || params.max_u < 0 || params.max_cost < 1 ||
      params.budget < 0 || !(params.budget_fraction.den > 0)) {
    throw Error(ErrorCode::kInvalidArgument, "invalid generator parameters");
  }
  if (params.max_u > 0 && params.arcs > (kValueCap - 1) / params.max_u) {
    throw Error(ErrorCode::kInvalidArgument, "m * maxU reaches the value cap");
  }
  Rng rng(params.seed);
  std::vector<SpTree::Node> nodes;
  const int root = BuildShape(0, params.arcs, params.parallel_only, rng, &nodes);

  Instance instance;
  instance.tree = SpTree::FromNodes(nodes, root);
  for (int i = 0; i < params.arcs; ++i) {
    Arc arc;
    arc.id = "a" + std::to_string(i + 1);
    arc.u1 = rng.Uniform(0, params.max_u);
    arc.u2 = rng.Uniform(0, params.max_u);
    arc.cost = rng.Uniform(1, params.max_cost);
    instance.arcs.push_back(arc);
  }
  if (params.use_fraction) {
    const __int128 total = instance.total_cost();
    instance.budget = static_cast<std::int64_t>(
        total * params.budget_fraction.num / params.budget_fraction.den);
  } else {
    instance.budget = params.budget;
  }
  return instance;
}

Instance GenerateHardParallel(int arcs) {
  if (arcs < 2) {
    throw Error(ErrorCode::kInvalidArgument, "hard-parallel needs m >= 2");
  }
  // m * 2^m must stay below 2^60.
  if (arcs >= 56 || (static_cast<__int128>(arcs) << arcs) >= kValueCap) {
    throw Error(ErrorCode::kOverflow, "m * 2^m exceeds the value cap");
  }
  Instance instance;
  std::string expression = "P(";
  for (int i = 1; i <= arcs; ++i) {
    Arc arc;
    arc.id = "a" + std::to_string(i);
    arc.u1 = std::int64_t{1} << i;
    arc.u2 = std::int64_t{1} << (arcs - i);
    arc.cost = 1;
    instance.arcs.push_back(arc);
    if (i > 1) expression += ",";
    expression += "arc(" + arc.id + ")";
  }
  expression += ")";
  instance.tree = ParseSpExpression(expression).tree;
  instance.budget = arcs;
  return instance;
}

KnapsackDecisionInstance GenerateKnapsackDecision(
    const ReductionGenParams& params) {
  if (params.items < 1 || params.max_p < 1 || params.max_w < 1) {
    throw Error(ErrorCode::kInvalidArgument, "invalid generator parameters");
  }
  Rng rng(params.seed);
  KnapsackDecisionInstance out;
  std::int64_t sum_p = 0;
  std::int64_t sum_w = 0;
  for (int i = 0; i < params.items; ++i) {
    KnapsackItem item;
    item.p = rng.Uniform(1, params.max_p);
    item.w = rng.Uniform(1, params.max_w);
    sum_p += item.p;
    sum_w += item.w;
    out.items.push_back(item);
  }
  out.profit_target = rng.Uniform(1, sum_p);
  out.weight_limit = rng.Uniform(1, sum_w);
  return out;
}

}  // namespace bmfni
