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

// JSON documents read and written by the command-line tool.
//
// Instance file ("bmfni-v1"):
//
//   {
//     "format": "bmfni-v1",
//     "graph": {"sp": "P(arc(a1),S(arc(a2),arc(a3)))"}
//           or {"edges": [{"id": "a1", "tail": "s", "head": "t"}, ...],
//               "source": "s", "sink": "t"},
//     "arcs": {"a1": {"u1": 2, "u2": 1, "c": 1}, ...},
//     "budget": 1,
//     "threshold": [3, 2]          (optional, decision threshold K)
//   }
//
// Knapsack envelopes use the same format tag with a "knapsack" key instead
// of "graph": {"items": [{"p": 3, "w": 2}, ...], "P": 3, "W": 2} for a
// decision instance, {"items": [{"p1": 2, "p2": 1, "w": 1}, ...],
// "capacity": 1} for a biobjective knapsack.
//
// Front file ("bmfni-front-v1"):
//
//   {
//     "format": "bmfni-front-v1",
//     "solver": "exact" | "fptas" | "oracle",
//     "parameters": {...},
//     "instance_digest": "fnv1a64:<16 hex digits>",
//     "points": [{"v1": 1, "v2": 3, "strategy": ["a1"], "cost": 1}, ...],
//     "timing": {"wall_ms": 0.12}
//   }
//
// Points are sorted by v1 ascending (v2 strictly descending). The digest is
// FNV-1a over the compact dump of the instance document and excludes
// timing, so repeated runs produce identical documents apart from "timing".

#ifndef BMFNI_IO_H_
#define BMFNI_IO_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bmfni/core_model.h"
#include "bmfni/knapsack_bridge.h"
#include "bmfni/pareto.h"
#include "json.hpp"

namespace bmfni {

using Json = nlohmann::json;

inline constexpr const char* kInstanceFormat = "bmfni-v1";
inline constexpr const char* kFrontFormat = "bmfni-front-v1";

// JSON syntax error with a 1-based source location.
class JsonSyntaxError : public Error {
 public:
  JsonSyntaxError(const std::string& message, int line, int column)
      : Error(ErrorCode::kParse, message), line_(line), column_(column) {}
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

// Throws JsonSyntaxError.
Json ParseJsonText(std::string_view text);

struct InstanceDocument {
  Instance instance;
  std::optional<ValuePair> threshold;
  std::string digest;
};

// Throws Error(kParse) for structural problems and Error(kValidation) when
// the arcs table and graph disagree. The instance is not validated further.
InstanceDocument ReadInstance(const Json& doc,
                              FoldOrder fold = FoldOrder::kLeft);

Json InstanceToJson(const Instance& instance,
                    const std::optional<ValuePair>& threshold = std::nullopt);

std::string Digest(const Json& doc);

KnapsackDecisionInstance ReadKnapsackDecision(const Json& doc);
BiKnapsackInstance ReadBiKnapsack(const Json& doc);
Json KnapsackDecisionToJson(const KnapsackDecisionInstance& knapsack);

struct FrontDocument {
  std::string solver;
  Json parameters = Json::object();
  std::string instance_digest;
  std::vector<LabeledPoint> points;
  double wall_ms = 0;
};

Json FrontToJson(const Instance& instance, const FrontDocument& front);

// Reads points back, resolving strategy arc ids against `instance`.
FrontDocument ReadFront(const Json& doc, const Instance& instance);

}  // namespace bmfni

#endif  // BMFNI_IO_H_
