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


#include "bmfni/exact_dp.h"

#include <gtest/gtest.h>

#include <vector>

#include "bmfni/flow_eval.h"
#include "bmfni/generator.h"
#include "bmfni/oracle.h"

namespace bmfni {
namespace {

struct ArcSpec {
  std::int64_t u1;
  std::int64_t u2;
  std::int64_t cost = 1;
};

Instance Make(const std::string& expression, const std::vector<ArcSpec>& arcs,
              std::int64_t budget) {
  ParsedSpExpression parsed = ParseSpExpression(expression);
  Instance instance;
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    instance.arcs.push_back(
        {parsed.arc_ids[i], arcs[i].u1, arcs[i].u2, arcs[i].cost});
  }
  instance.tree = parsed.tree;
  instance.budget = budget;
  return instance;
}

std::vector<ValuePair> At(const BudgetSets& sets, int x) {
  return Values(sets[x]);
}

TEST(LeafLabelsTest, AffordableArc) {
  const Instance instance = Make("arc(a)", {{3, 5, 2}}, 3);
  const BudgetSets sets = LeafLabels(instance, 0, 3);
  ASSERT_EQ(sets.size(), 4u);
  EXPECT_EQ(At(sets, 0), (std::vector<ValuePair>{{3, 5}}));
  EXPECT_EQ(At(sets, 1), (std::vector<ValuePair>{{3, 5}}));
  EXPECT_EQ(At(sets, 2), (std::vector<ValuePair>{{0, 0}}));
  EXPECT_EQ(At(sets, 3), (std::vector<ValuePair>{{0, 0}}));
  EXPECT_TRUE(sets[3][0].witness.interdicts(0));
}

TEST(LeafLabelsTest, UnaffordableArc) {
  const Instance instance = Make("arc(a)", {{3, 5, 5}}, 3);
  const BudgetSets sets = LeafLabels(instance, 0, 3);
  for (int x = 0; x <= 3; ++x) {
    EXPECT_EQ(At(sets, x), (std::vector<ValuePair>{{3, 5}}));
  }
}

TEST(LeafLabelsTest, ZeroCapacityArc) {
  const Instance instance = Make("arc(a)", {{0, 0, 1}}, 1);
  const BudgetSets sets = LeafLabels(instance, 0, 1);
  EXPECT_EQ(At(sets, 0), (std::vector<ValuePair>{{0, 0}}));
  EXPECT_EQ(At(sets, 1), (std::vector<ValuePair>{{0, 0}}));
  EXPECT_TRUE(sets[1][0].witness.empty());
}

TEST(ComposeTest, ParallelExample) {
  const Instance instance = Make("P(arc(a),arc(b))", {{2, 1}, {1, 3}}, 1);
  const BudgetSets sets =
      ParallelCompose(LeafLabels(instance, 0, 1), LeafLabels(instance, 1, 1));
  EXPECT_EQ(At(sets, 0), (std::vector<ValuePair>{{3, 4}}));
  EXPECT_EQ(At(sets, 1), (std::vector<ValuePair>{{1, 3}, {2, 1}}));
}

TEST(ComposeTest, ParallelWithZeroChild) {
  const Instance instance =
      Make("P(arc(a),arc(b))", {{5, 2}, {0, 0}}, 2);
  const BudgetSets sets =
      ParallelCompose(LeafLabels(instance, 0, 2), LeafLabels(instance, 1, 2));
  EXPECT_EQ(At(sets, 0), (std::vector<ValuePair>{{5, 2}}));
  EXPECT_EQ(At(sets, 1), (std::vector<ValuePair>{{0, 0}}));
}

TEST(ComposeTest, ParallelFullInterdiction) {
  const Instance instance = Make("P(arc(a),arc(b))", {{1, 1}, {1, 1}}, 2);
  const BudgetSets sets =
      ParallelCompose(LeafLabels(instance, 0, 2), LeafLabels(instance, 1, 2));
  EXPECT_EQ(At(sets, 1), (std::vector<ValuePair>{{1, 1}}));
  EXPECT_EQ(At(sets, 2), (std::vector<ValuePair>{{0, 0}}));
}

TEST(ComposeTest, SeriesExamples) {
  const Instance instance = Make("S(arc(a),arc(b))", {{2, 5}, {4, 3}}, 1);
  const BudgetSets sets =
      SeriesCompose(LeafLabels(instance, 0, 1), LeafLabels(instance, 1, 1));
  EXPECT_EQ(At(sets, 0), (std::vector<ValuePair>{{2, 3}}));
  EXPECT_EQ(At(sets, 1), (std::vector<ValuePair>{{0, 0}}));

  const Instance equal = Make("S(arc(a),arc(b))", {{3, 3}, {3, 3}}, 0);
  EXPECT_EQ(At(SeriesCompose(LeafLabels(equal, 0, 0), LeafLabels(equal, 1, 0)),
               0),
            (std::vector<ValuePair>{{3, 3}}));

  const Instance zero = Make("S(arc(a),arc(b))", {{0, 0}, {7, 9}}, 1);
  const BudgetSets z =
      SeriesCompose(LeafLabels(zero, 0, 1), LeafLabels(zero, 1, 1));
  EXPECT_EQ(At(z, 0), (std::vector<ValuePair>{{0, 0}}));
  EXPECT_EQ(At(z, 1), (std::vector<ValuePair>{{0, 0}}));
}

TEST(ComposeTest, CountsCreatedLabels) {
  const Instance instance = Make("P(arc(a),arc(b))", {{2, 1}, {1, 3}}, 1);
  std::int64_t created = 0;
  ParallelCompose(LeafLabels(instance, 0, 1), LeafLabels(instance, 1, 1), 1,
                  &created);
  // x=0: 1 pair; x=1: k=0 and k=1 give one pair each.
  EXPECT_EQ(created, 3);
}

TEST(SolveExactTest, ThreeArcExample) {
  const Instance instance =
      Make("P(arc(a),S(arc(b),arc(c)))", {{2, 1}, {4, 4}, {1, 3}}, 1);
  const ExactResult result = SolveExact(instance);
  ASSERT_EQ(Values(result.front), (std::vector<ValuePair>{{1, 3}, {2, 1}}));
  EXPECT_EQ(instance.ArcIds(result.front[0].witness),
            (std::vector<std::string>{"a"}));
  // b and c both reach (2, 1); the witness that keeps b is preferred.
  EXPECT_EQ(instance.ArcIds(result.front[1].witness),
            (std::vector<std::string>{"c"}));
}

TEST(SolveExactTest, ZeroBudgetGivesUninterdictedValue) {
  for (int seed = 0; seed < 30; ++seed) {
    SpGenParams params;
    params.arcs = 1 + seed % 10;
    params.seed = seed;
    params.max_cost = 3;
    const Instance instance = GenerateSp(params);
    const ExactResult result = SolveExact(instance);
    ASSERT_EQ(result.front.size(), 1u);
    EXPECT_EQ(result.front[0].value,
              SpValuePair(instance, Strategy(instance.num_arcs())));
  }
}

TEST(SolveExactTest, BudgetIsClampedToTotalCost) {
  const Instance instance = Make("P(arc(a),arc(b))", {{2, 1}, {1, 3}}, 1000);
  const ExactResult result = SolveExact(instance);
  EXPECT_EQ(result.stats.budget_used, 2);
  EXPECT_EQ(Values(result.front), (std::vector<ValuePair>{{0, 0}}));
}

TEST(SolveExactTest, KeepsTableOnRequest) {
  const Instance instance =
      Make("P(arc(a),S(arc(b),arc(c)))", {{2, 1}, {4, 4}, {1, 3}}, 1);
  ExactOptions options;
  options.keep_table = true;
  const ExactResult result = SolveExact(instance, options);
  ASSERT_TRUE(result.table.has_value());
  EXPECT_EQ(result.table->sets.size(), 5u);
  EXPECT_EQ(Values(result.table->sets[instance.tree->root()][0]),
            (std::vector<ValuePair>{{3, 4}}));
}

TEST(SolveExactTest, PointsOnlyModeMatches) {
  for (int seed = 0; seed < 40; ++seed) {
    SpGenParams params;
    params.arcs = 1 + seed % 12;
    params.seed = 50 + seed;
    params.max_cost = 2;
    params.budget = seed % 6;
    const Instance instance = GenerateSp(params);
    ExactOptions options;
    options.track_witnesses = false;
    EXPECT_EQ(Values(SolveExact(instance, options).front),
              Values(SolveExact(instance).front));
  }
}

TEST(SolveExactTest, ThreadCountDoesNotChangeResult) {
  for (int seed = 0; seed < 20; ++seed) {
    SpGenParams params;
    params.arcs = 4 + seed;
    params.seed = 300 + seed;
    params.max_u = 100;
    params.budget = 5;
    const Instance instance = GenerateSp(params);
    const ExactResult serial = SolveExact(instance);
    ExactOptions options;
    options.threads = 4;
    const ExactResult threaded = SolveExact(instance, options);
    ASSERT_EQ(Values(serial.front), Values(threaded.front));
    for (std::size_t i = 0; i < serial.front.size(); ++i) {
      EXPECT_EQ(serial.front[i].witness, threaded.front[i].witness);
    }
    EXPECT_EQ(serial.stats.labels_created, threaded.stats.labels_created);
  }
}

TEST(SolveExactTest, RecognizesEdgeListInstances) {
  Instance instance;
  instance.arcs = {{"a", 2, 1, 1}, {"b", 4, 4, 1}, {"c", 1, 3, 1}};
  EdgeGraph g;
  g.vertex_names = {"s", "t", "v"};
  g.edges = {{0, 0, 1}, {1, 0, 2}, {2, 2, 1}};
  instance.edges = g;
  instance.budget = 1;
  EXPECT_EQ(Values(SolveExact(instance).front),
            (std::vector<ValuePair>{{1, 3}, {2, 1}}));
}

// Anti-correlated capacities on parallel-heavy trees give large fronts.
TEST(SolveExactTest, AgreesWithOracleOnLargeFronts) {
  std::size_t largest = 0;
  for (int seed = 0; seed < 120; ++seed) {
    Rng draw(seed);
    SpGenParams params;
    params.arcs = static_cast<int>(draw.Uniform(2, 14));
    params.seed = 1000 + seed;
    params.max_u = seed % 2 == 0 ? 1000 : 12;
    params.max_cost = seed % 3 == 0 ? 1 : 4;
    params.parallel_only = seed % 4 != 3;
    Instance instance = GenerateSp(params);
    for (Arc& a : instance.arcs) a.u2 = params.max_u - a.u1;
    instance.budget = draw.Uniform(0, instance.total_cost());
    const ExactResult result = SolveExact(instance);
    const OracleReport report = EnumerateFront(instance);
    ASSERT_EQ(Values(result.front), report.Values()) << "seed " << seed;
    const Verdict verdict =
        VerifyFront(instance, result.front, report, ExactMode{});
    EXPECT_TRUE(verdict.pass) << "seed " << seed;
    largest = std::max(largest, result.front.size());
  }
  EXPECT_GE(largest, 20u);
}

TEST(DecisionCheckTest, Examples) {
  const Instance instance =
      Make("P(arc(a),S(arc(b),arc(c)))", {{2, 1}, {4, 4}, {1, 3}}, 1);
  EXPECT_TRUE(DecisionCheck(instance, {3, 4}));
  EXPECT_TRUE(DecisionCheck(instance, {1, 3}));
  EXPECT_TRUE(DecisionCheck(instance, {2, 1}));
  EXPECT_FALSE(DecisionCheck(instance, {1, 2}));
  EXPECT_FALSE(DecisionCheck(instance, {0, 0}));
}

}  // namespace
}  // namespace bmfni
