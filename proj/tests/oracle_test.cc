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

#include <gtest/gtest.h>

#include <vector>

#include "bmfni/generator.h"

namespace bmfni {
namespace {

Instance Make(const std::string& expression,
              const std::vector<std::array<std::int64_t, 3>>& arcs,
              std::int64_t budget) {
  ParsedSpExpression parsed = ParseSpExpression(expression);
  Instance instance;
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    instance.arcs.push_back(
        {parsed.arc_ids[i], arcs[i][0], arcs[i][1], arcs[i][2]});
  }
  instance.tree = parsed.tree;
  instance.budget = budget;
  return instance;
}

TEST(EnumerateFrontTest, SingleArc) {
  const OracleReport report = EnumerateFront(Make("arc(a)", {{3, 5, 2}}, 2));
  EXPECT_EQ(report.Values(), (std::vector<ValuePair>{{0, 0}}));
  EXPECT_EQ(report.strategies_enumerated, 2);
}

TEST(EnumerateFrontTest, ZeroBudget) {
  const Instance instance =
      Make("P(arc(a),S(arc(b),arc(c)))", {{2, 1, 1}, {4, 4, 1}, {1, 3, 1}}, 0);
  const OracleReport report = EnumerateFront(instance);
  EXPECT_EQ(report.Values(), (std::vector<ValuePair>{{3, 4}}));
  EXPECT_EQ(report.strategies_enumerated, 1);
}

TEST(EnumerateFrontTest, TwoParallelArcs) {
  const Instance instance =
      Make("P(arc(a),arc(b))", {{2, 1, 1}, {1, 3, 1}}, 1);
  const OracleReport report = EnumerateFront(instance);
  EXPECT_EQ(report.Values(), (std::vector<ValuePair>{{1, 3}, {2, 1}}));
  EXPECT_EQ(report.strategies_enumerated, 3);
}

TEST(EnumerateFrontTest, KeepsEveryWitness) {
  const Instance instance =
      Make("P(arc(a),S(arc(b),arc(c)))", {{2, 1, 1}, {4, 4, 1}, {1, 3, 1}}, 1);
  const OracleReport report = EnumerateFront(instance);
  ASSERT_EQ(report.front.size(), 2u);
  ASSERT_EQ(report.front[1].witnesses.size(), 2u);
  EXPECT_EQ(instance.ArcIds(report.front[1].witnesses[0]),
            (std::vector<std::string>{"c"}));
  EXPECT_EQ(instance.ArcIds(report.front[1].witnesses[1]),
            (std::vector<std::string>{"b"}));
}

TEST(EnumerateFrontTest, CostPruningCountsOnlyFeasibleStrategies) {
  // Costs 1, 2, 3, 4 with budget 4: feasible subsets are {}, {1}, {2}, {3},
  // {4}, {1,2}, {1,3}.
  const Instance instance = Make(
      "P(arc(a),arc(b),arc(c),arc(d))",
      {{1, 1, 1}, {1, 1, 2}, {1, 1, 3}, {1, 1, 4}}, 4);
  EXPECT_EQ(EnumerateFront(instance).strategies_enumerated, 7);
}

TEST(EnumerateFrontTest, SizeGuard) {
  SpGenParams params;
  params.arcs = 25;
  params.budget = 1;
  try {
    EnumerateFront(GenerateSp(params));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kTooLarge);
  }
  OracleOptions options;
  options.max_arcs = 4;
  params.arcs = 5;
  EXPECT_THROW(EnumerateFront(GenerateSp(params), options), Error);
}

TEST(EnumerateFrontTest, FrontIsFilterFixpointAndThreadIndependent) {
  for (int seed = 0; seed < 30; ++seed) {
    SpGenParams params;
    params.arcs = 3 + seed % 12;
    params.seed = seed;
    params.max_cost = 3;
    params.budget = 4;
    const Instance instance = GenerateSp(params);
    const OracleReport report = EnumerateFront(instance);
    EXPECT_EQ(Values(FilterNondominated(report.Labeled())), report.Values());
    OracleOptions threaded;
    threaded.threads = 3;
    const OracleReport other = EnumerateFront(instance, threaded);
    ASSERT_EQ(other.Values(), report.Values());
    for (std::size_t i = 0; i < report.front.size(); ++i) {
      EXPECT_EQ(other.front[i].witnesses, report.front[i].witnesses);
    }
    EXPECT_EQ(other.strategies_enumerated, report.strategies_enumerated);
  }
}

class VerifyFrontTest : public ::testing::Test {
 protected:
  Instance instance_ =
      Make("P(arc(a),S(arc(b),arc(c)))", {{2, 1, 1}, {4, 4, 1}, {1, 3, 1}}, 1);
  OracleReport report_ = EnumerateFront(instance_);
};

TEST_F(VerifyFrontTest, OracleFrontPassesExactMode) {
  EXPECT_TRUE(VerifyFront(instance_, report_.Labeled(), report_, ExactMode{}).pass);
}

TEST_F(VerifyFrontTest, MissingPointIsListed) {
  std::vector<LabeledPoint> truncated = report_.Labeled();
  truncated.pop_back();
  const Verdict v = VerifyFront(instance_, truncated, report_, ExactMode{});
  EXPECT_FALSE(v.pass);
  EXPECT_EQ(v.missing, (std::vector<ValuePair>{{2, 1}}));
}

TEST_F(VerifyFrontTest, WrongWitnessIsReported) {
  std::vector<LabeledPoint> wrong = report_.Labeled();
  wrong[0].witness = instance_.MakeStrategy({1});
  const Verdict v = VerifyFront(instance_, wrong, report_, ExactMode{});
  EXPECT_FALSE(v.pass);
  EXPECT_FALSE(v.problems.empty());
}

TEST_F(VerifyFrontTest, OverBudgetWitnessIsReported) {
  std::vector<LabeledPoint> points = {
      {{0, 0}, instance_.MakeStrategy({0, 1})}};
  const Verdict v =
      VerifyFront(instance_, points, report_, EpsMode{Rational::Make(1, 1)});
  EXPECT_FALSE(v.pass);
}

TEST_F(VerifyFrontTest, ExactFrontPassesEpsMode) {
  for (const Rational& eps : {Rational::Make(1, 1000), Rational::Make(3, 1)}) {
    EXPECT_TRUE(
        VerifyFront(instance_, report_.Labeled(), report_, EpsMode{eps}).pass);
  }
}

TEST_F(VerifyFrontTest, EpsModeDetectsUncoveredPoint) {
  // Only (2, 1) survives: (1, 3) needs 2 <= (1 + eps) * 1.
  std::vector<LabeledPoint> partial = {report_.Labeled()[1]};
  EXPECT_FALSE(VerifyFront(instance_, partial, report_,
                           EpsMode{Rational::Make(1, 2)})
                   .pass);
  EXPECT_TRUE(VerifyFront(instance_, partial, report_,
                          EpsMode{Rational::Make(1, 1)})
                  .pass);
}

TEST_F(VerifyFrontTest, UnexpectedPointIsListed) {
  std::vector<LabeledPoint> extra = report_.Labeled();
  extra.push_back({{3, 4}, Strategy(3)});
  const Verdict v = VerifyFront(instance_, extra, report_, ExactMode{});
  EXPECT_FALSE(v.pass);
  EXPECT_EQ(v.unexpected, (std::vector<ValuePair>{{3, 4}}));
}

}  // namespace
}  // namespace bmfni
