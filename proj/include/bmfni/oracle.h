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

// Brute-force reference: enumerate every feasible strategy, evaluate both
// flows with the generic max-flow routine on the arc list, keep the
// nondominated outcomes. Shares nothing with the tree solvers but the data
// model.

#ifndef BMFNI_ORACLE_H_
#define BMFNI_ORACLE_H_

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "bmfni/core_model.h"
#include "bmfni/pareto.h"
#include "bmfni/rational.h"

namespace bmfni {

inline constexpr int kDefaultOracleArcLimit = 24;

struct OracleOptions {
  int max_arcs = kDefaultOracleArcLimit;
  int threads = 1;
};

struct OraclePoint {
  ValuePair value;
  std::vector<Strategy> witnesses;  // every efficient strategy, sorted
};

struct OracleReport {
  std::vector<OraclePoint> front;  // v1 ascending, v2 strictly descending
  std::int64_t strategies_enumerated = 0;
  double wall_ms = 0;

  // One labeled point per front value, witnessed by its smallest strategy.
  std::vector<LabeledPoint> Labeled() const;
  std::vector<ValuePair> Values() const;
};

// Throws kTooLarge if the instance has more than options.max_arcs arcs.
OracleReport EnumerateFront(const Instance& instance,
                            const OracleOptions& options = {});

struct ExactMode {};
struct EpsMode {
  Rational eps;
};
using VerifyMode = std::variant<ExactMode, EpsMode>;

struct Verdict {
  bool pass = true;
  std::vector<ValuePair> missing;     // oracle points not matched or covered
  std::vector<ValuePair> unexpected;  // candidate values not on the front
  std::vector<std::string> problems;  // witness and consistency failures
};

// Exact mode: candidate values equal the oracle front and every witness
// re-evaluates to its value within budget. Eps mode: every oracle point is
// eps-covered by a candidate value and every witness is feasible and
// value-consistent.
Verdict VerifyFront(const Instance& instance,
                    const std::vector<LabeledPoint>& candidate,
                    const OracleReport& report, const VerifyMode& mode);

}  // namespace bmfni

#endif  // BMFNI_ORACLE_H_
