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

#include "bmfni/oracle.h"

#include <algorithm>
#include <chrono>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "bmfni/flow_eval.h"
#include "bmfni/parallel.h"

namespace bmfni {
namespace {

// Nondominated staircase keyed by v1; v2 strictly decreases along the map.
class Staircase {
 public:
  void Insert(const ValuePair& value, std::uint64_t mask) {
    auto it = steps_.upper_bound(value.v1);
    if (it != steps_.begin()) {
      auto prev = std::prev(it);
      if (prev->second.v2 <= value.v2) {
        if (prev->first == value.v1 && prev->second.v2 == value.v2) {
          prev->second.masks.push_back(mask);
        }
        return;
      }
    }
    it = steps_.lower_bound(value.v1);
    while (it != steps_.end() && it->second.v2 >= value.v2) {
      it = steps_.erase(it);
    }
    steps_.emplace(value.v1, Step{value.v2, {mask}});
  }

  void Merge(const Staircase& other) {
    for (const auto& [v1, step] : other.steps_) {
      for (std::uint64_t mask : step.masks) Insert({v1, step.v2}, mask);
    }
  }

  std::vector<OraclePoint> Points(int num_arcs) const {
    std::vector<OraclePoint> out;
    for (const auto& [v1, step] : steps_) {
      OraclePoint point{{v1, step.v2}, {}};
      for (std::uint64_t mask : step.masks) {
        Strategy s(num_arcs);
        for (int a = 0; a < num_arcs; ++a) {
          if ((mask >> a) & 1u) s.Interdict(a, 0);
        }
        point.witnesses.push_back(std::move(s));
      }
      std::sort(point.witnesses.begin(), point.witnesses.end());
      out.push_back(std::move(point));
    }
    return out;
  }

 private:
  struct Step {
    std::int64_t v2;
    std::vector<std::uint64_t> masks;
  };
  std::map<std::int64_t, Step> steps_;
};

// Depth-first include/exclude enumeration over arcs ordered by decreasing
// cost, pruning branches whose cost already exceeds the budget.
class Enumerator {
 public:
  Enumerator(const Instance& instance, const EdgeGraph& graph,
             const std::vector<int>& order)
      : instance_(instance),
        order_(order),
        solver_(graph),
        c1_(instance.num_arcs()),
        c2_(instance.num_arcs()) {
    for (int a = 0; a < instance.num_arcs(); ++a) {
      c1_[a] = instance.arcs[a].u1;
      c2_[a] = instance.arcs[a].u2;
    }
  }

  // Enumerates completions of a fixed prefix decision over order_[0..depth).
  void Run(int depth, std::uint64_t prefix_mask, std::int64_t prefix_cost) {
    for (int i = 0; i < depth; ++i) {
      const int arc = order_[i];
      if ((prefix_mask >> arc) & 1u) c1_[arc] = c2_[arc] = 0;
    }
    Recurse(depth, prefix_mask, prefix_cost);
  }

  const Staircase& front() const { return front_; }
  std::int64_t enumerated() const { return enumerated_; }

 private:
  void Recurse(int depth, std::uint64_t mask, std::int64_t cost) {
    if (depth == static_cast<int>(order_.size())) {
      ++enumerated_;
      front_.Insert({solver_.Solve(c1_), solver_.Solve(c2_)}, mask);
      return;
    }
    const int arc = order_[depth];
    Recurse(depth + 1, mask, cost);
    const Arc& a = instance_.arcs[arc];
    if (cost + a.cost <= instance_.budget) {
      c1_[arc] = c2_[arc] = 0;
      Recurse(depth + 1, mask | (std::uint64_t{1} << arc), cost + a.cost);
      c1_[arc] = a.u1;
      c2_[arc] = a.u2;
    }
  }

  const Instance& instance_;
  const std::vector<int>& order_;
  MaxFlowSolver solver_;
  std::vector<std::int64_t> c1_;
  std::vector<std::int64_t> c2_;
  Staircase front_;
  std::int64_t enumerated_ = 0;
};

}  // namespace

std::vector<LabeledPoint> OracleReport::Labeled() const {
  std::vector<LabeledPoint> out;
  for (const OraclePoint& p : front) {
    out.push_back({p.value, p.witnesses.front()});
  }
  return out;
}

std::vector<ValuePair> OracleReport::Values() const {
  std::vector<ValuePair> out;
  for (const OraclePoint& p : front) out.push_back(p.value);
  return out;
}

OracleReport EnumerateFront(const Instance& instance,
                            const OracleOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  ValidateOrThrow(instance);
  const int m = instance.num_arcs();
  if (m > options.max_arcs || m > 63) {
    std::ostringstream msg;
    msg << "oracle refuses " << m << " arcs (limit "
        << std::min(options.max_arcs, 63) << ")";
    throw Error(ErrorCode::kTooLarge, msg.str());
  }
  const EdgeGraph graph = EdgeGraphOf(instance);

  std::vector<int> order(m);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return instance.arcs[a].cost > instance.arcs[b].cost;
  });

  // Fix the first `depth` decisions per task; infeasible prefixes are
  // dropped up front.
  int depth = 0;
  while (depth < m && (1 << depth) < 4 * options.threads && depth < 10) {
    ++depth;
  }
  if (options.threads <= 1) depth = 0;
  struct Task {
    std::uint64_t mask;
    std::int64_t cost;
  };
  std::vector<Task> tasks;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << depth); ++bits) {
    Task task{0, 0};
    for (int i = 0; i < depth; ++i) {
      if ((bits >> i) & 1u) {
        task.mask |= std::uint64_t{1} << order[i];
        task.cost += instance.arcs[order[i]].cost;
      }
    }
    if (task.cost <= instance.budget) tasks.push_back(task);
  }

  std::vector<Staircase> fronts(tasks.size());
  std::vector<std::int64_t> counts(tasks.size(), 0);
  ParallelFor(static_cast<int>(tasks.size()), options.threads, [&](int i) {
    Enumerator enumerator(instance, graph, order);
    enumerator.Run(depth, tasks[i].mask, tasks[i].cost);
    fronts[i] = enumerator.front();
    counts[i] = enumerator.enumerated();
  });
  Staircase merged;
  for (const Staircase& f : fronts) merged.Merge(f);

  OracleReport report;
  report.front = merged.Points(m);
  // Witness costs are recomputed from the arc table.
  for (OraclePoint& p : report.front) {
    for (Strategy& s : p.witnesses) {
      s = instance.MakeStrategy(s.bits().Indices());
    }
  }
  report.strategies_enumerated =
      std::accumulate(counts.begin(), counts.end(), std::int64_t{0});
  report.wall_ms = std::chrono::duration<double, std::milli>(
                       std::chrono::steady_clock::now() - start)
                       .count();
  return report;
}

Verdict VerifyFront(const Instance& instance,
                    const std::vector<LabeledPoint>& candidate,
                    const OracleReport& report, const VerifyMode& mode) {
  Verdict verdict;
  const EdgeGraph graph = EdgeGraphOf(instance);
  const int m = instance.num_arcs();

  for (const LabeledPoint& p : candidate) {
    std::ostringstream where;
    where << "point " << p.value << ": ";
    if (p.witness.num_arcs() != m) {
      verdict.problems.push_back(where.str() + "witness has wrong length");
      continue;
    }
    const Strategy recosted = instance.MakeStrategy(p.witness.bits().Indices());
    if (recosted.cost() > instance.budget) {
      verdict.problems.push_back(where.str() + "witness exceeds the budget");
    }
    const ValuePair actual = GenericValuePair(graph, instance, p.witness);
    if (actual != p.value) {
      std::ostringstream msg;
      msg << where.str() << "witness evaluates to " << actual;
      verdict.problems.push_back(msg.str());
    }
  }

  const std::vector<ValuePair> truth = report.Values();
  if (std::holds_alternative<ExactMode>(mode)) {
    std::set<ValuePair> want(truth.begin(), truth.end());
    std::set<ValuePair> got;
    for (const LabeledPoint& p : candidate) {
      if (!got.insert(p.value).second) {
        std::ostringstream msg;
        msg << "point " << p.value << ": duplicated";
        verdict.problems.push_back(msg.str());
      }
    }
    std::set_difference(want.begin(), want.end(), got.begin(), got.end(),
                        std::back_inserter(verdict.missing));
    std::set_difference(got.begin(), got.end(), want.begin(), want.end(),
                        std::back_inserter(verdict.unexpected));
  } else {
    const Rational& eps = std::get<EpsMode>(mode).eps;
    for (const ValuePair& p : truth) {
      if (!EpsCovers(std::span<const LabeledPoint>(candidate), p, eps)) {
        verdict.missing.push_back(p);
      }
    }
  }
  verdict.pass = verdict.missing.empty() && verdict.unexpected.empty() &&
                 verdict.problems.empty();
  return verdict;
}

}  // namespace bmfni
