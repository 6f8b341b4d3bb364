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

// Seeded instance generators.
//
// Randomness comes from std::mt19937_64 (whose output sequence the C++
// standard fixes) seeded with the user seed. Bounded integers use
// rejection sampling, never std::uniform_int_distribution, whose algorithm
// is implementation-defined:
//
//   Uniform(lo, hi): span = hi - lo + 1, limit = floor(2^64 / span) * span;
//                    draw x until x < limit; return lo + x % span.
//
// Generated instances (serialized as JSON) are the reproducibility contract;
// the draw order of each generator is documented below.

#ifndef BMFNI_GENERATOR_H_
#define BMFNI_GENERATOR_H_

#include <cstdint>
#include <random>

#include "bmfni/core_model.h"
#include "bmfni/knapsack_bridge.h"
#include "bmfni/rational.h"

namespace bmfni {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t Next() { return engine_(); }
  // Uniform integer in [lo, hi]; requires lo <= hi.
  std::int64_t Uniform(std::int64_t lo, std::int64_t hi);
  bool Coin() { return Uniform(0, 1) == 1; }

 private:
  std::mt19937_64 engine_;
};

struct SpGenParams {
  int arcs = 1;
  std::uint64_t seed = 0;
  std::int64_t max_u = 10;
  std::int64_t max_cost = 1;
  // Budget rule: a fixed budget, or floor(fraction * total cost) when
  // `budget_fraction` is set.
  std::int64_t budget = 0;
  bool use_fraction = false;
  Rational budget_fraction = {1, 2};
  bool parallel_only = false;
};

// Random decomposition tree with `arcs` leaves named a1..am left to right.
// Draw order: tree shape in pre-order (at each internal node the split
// point k ~ Uniform(1, m-1) for the left subtree, then the kind: Coin()
// true = series; parallel_only skips the coin), then for every arc in order
// u1 ~ Uniform(0, max_u), u2 ~ Uniform(0, max_u), c ~ Uniform(1, max_cost).
// Throws kInvalidArgument on invalid parameters.
Instance GenerateSp(const SpGenParams& params);

// Parallel arcs a1..am with u(a_i) = (2^i, 2^(m-i)), unit costs, B = m.
// Throws kInvalidArgument for m < 2 and kOverflow when m * 2^m would exceed
// the value cap.
Instance GenerateHardParallel(int arcs);

struct ReductionGenParams {
  int items = 1;
  std::uint64_t seed = 0;
  std::int64_t max_p = 10;
  std::int64_t max_w = 10;
};

// Draw order: for each item p ~ Uniform(1, max_p), w ~ Uniform(1, max_w);
// then P ~ Uniform(1, sum p), W ~ Uniform(1, sum w).
KnapsackDecisionInstance GenerateKnapsackDecision(
    const ReductionGenParams& params);

}  // namespace bmfni

#endif  // BMFNI_GENERATOR_H_
