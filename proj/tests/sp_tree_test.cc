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


#include "bmfni/sp_tree.h"

#include <gtest/gtest.h>

#include <string>
#include <vector>

#include "bmfni/errors.h"
#include "bmfni/generator.h"

namespace bmfni {
namespace {

using Kind = SpTree::Kind;

EdgeGraph Graph(const std::vector<std::vector<std::string>>& edges) {
  EdgeGraph g;
  g.vertex_names = {"s", "t"};
  auto vertex = [&](const std::string& name) {
    for (int i = 0; i < g.num_vertices(); ++i) {
      if (g.vertex_names[i] == name) return i;
    }
    g.vertex_names.push_back(name);
    return g.num_vertices() - 1;
  };
  for (std::size_t i = 0; i < edges.size(); ++i) {
    g.edges.push_back({static_cast<int>(i), vertex(edges[i][0]),
                       vertex(edges[i][1])});
  }
  return g;
}

ErrorCode CodeOf(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::kInvalidArgument;
}

TEST(ParseTest, ParallelOfTwoArcs) {
  const ParsedSpExpression p = ParseSpExpression("P(arc(a1),arc(a2))");
  EXPECT_EQ(p.arc_ids, (std::vector<std::string>{"a1", "a2"}));
  const SpTree& t = p.tree;
  ASSERT_EQ(t.size(), 3);
  EXPECT_EQ(t.node(t.root()).kind, Kind::kParallel);
  EXPECT_EQ(t.node(t.node(t.root()).left).arc, 0);
  EXPECT_EQ(t.node(t.node(t.root()).right).arc, 1);
}

TEST(ParseTest, NaryFoldsLeftByDefault) {
  const SpTree t = ParseSpExpression("S(arc(a1),arc(a2),arc(a3))").tree;
  EXPECT_EQ(t.ToExpression({"a1", "a2", "a3"}),
            "S(S(arc(a1),arc(a2)),arc(a3))");
  const SpTree r =
      ParseSpExpression("S(arc(a1),arc(a2),arc(a3))", FoldOrder::kRight).tree;
  EXPECT_EQ(r.ToExpression({"a1", "a2", "a3"}),
            "S(arc(a1),S(arc(a2),arc(a3)))");
  EXPECT_EQ(t.Canonical(), r.Canonical());
}

TEST(ParseTest, WhitespaceIsIgnored) {
  const SpTree t =
      ParseSpExpression(" P ( arc ( x ) ,\n S( arc(y), arc(z) ) ) ").tree;
  EXPECT_EQ(t.Canonical(), "P(a0,S(a1,a2))");
}

TEST(ParseTest, Errors) {
  EXPECT_EQ(CodeOf([] { ParseSpExpression("S(arc(a1))"); }), ErrorCode::kParse);
  try {
    ParseSpExpression("S(arc(a1))");
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("unary composition"),
              std::string::npos);
  }
  EXPECT_EQ(CodeOf([] { ParseSpExpression("P(arc(a),arc(a))"); }),
            ErrorCode::kParse);
  EXPECT_EQ(CodeOf([] { ParseSpExpression("Q(arc(a),arc(b))"); }),
            ErrorCode::kParse);
  EXPECT_EQ(CodeOf([] { ParseSpExpression("P(arc(a),arc(b)"); }),
            ErrorCode::kParse);
  EXPECT_EQ(CodeOf([] { ParseSpExpression("arc(a) junk"); }),
            ErrorCode::kParse);
  EXPECT_EQ(CodeOf([] { ParseSpExpression(""); }), ErrorCode::kParse);
}

TEST(TreeTest, TerminalsAndSubtreeRanges) {
  const SpTree t = ParseSpExpression("P(arc(a),S(arc(b),arc(c)))").tree;
  ASSERT_EQ(t.size(), 5);
  EXPECT_EQ(t.num_arcs(), 3);
  EXPECT_EQ(t.num_vertices(), 3);
  EXPECT_EQ(t.subtree_begin(t.root()), 0);
  const int series = t.node(t.root()).right;
  EXPECT_EQ(t.node(series).kind, Kind::kSeries);
  EXPECT_EQ(t.LeafArcs(series), (std::vector<int>{1, 2}));
  EXPECT_EQ(t.node(series).source, 0);
  EXPECT_EQ(t.node(series).sink, 1);
  EXPECT_EQ(t.node(t.node(series).left).sink, 2);
  EXPECT_EQ(t.node(t.node(series).right).source, 2);
}

TEST(ExpandTest, Primitive) {
  const EdgeGraph g = Expand(SpTree::Primitive(0));
  ASSERT_EQ(g.edges.size(), 1u);
  EXPECT_EQ(g.vertex_names[g.edges[0].tail], "s");
  EXPECT_EQ(g.vertex_names[g.edges[0].head], "t");
}

TEST(ExpandTest, Series) {
  const EdgeGraph g = Expand(SpTree::Compose(
      Kind::kSeries, SpTree::Primitive(0), SpTree::Primitive(1)));
  ASSERT_EQ(g.edges.size(), 2u);
  EXPECT_EQ(g.vertex_names[g.edges[0].tail], "s");
  EXPECT_EQ(g.vertex_names[g.edges[0].head], "v1");
  EXPECT_EQ(g.vertex_names[g.edges[1].tail], "v1");
  EXPECT_EQ(g.vertex_names[g.edges[1].head], "t");
}

TEST(RecognizeTest, TwoParallelArcs) {
  const SpTree t = RecognizeSp(Graph({{"s", "t"}, {"s", "t"}}));
  EXPECT_EQ(t.node(t.root()).kind, Kind::kParallel);
  EXPECT_EQ(t.Canonical(), "P(a0,a1)");
}

TEST(RecognizeTest, PathPlusChord) {
  const SpTree t = RecognizeSp(Graph({{"s", "v"}, {"v", "t"}, {"s", "t"}}));
  EXPECT_EQ(t.Canonical(), "P(S(a0,a1),a2)");
}

TEST(RecognizeTest, WheatstoneBridgeIsNotSeriesParallel) {
  const EdgeGraph g = Graph(
      {{"s", "a"}, {"s", "b"}, {"a", "b"}, {"a", "t"}, {"b", "t"}});
  EXPECT_EQ(CodeOf([&] { RecognizeSp(g); }), ErrorCode::kNotSeriesParallel);
}

TEST(RecognizeTest, DisconnectedAndBadTerminals) {
  EXPECT_EQ(CodeOf([] { RecognizeSp(Graph({{"s", "t"}, {"x", "y"}})); }),
            ErrorCode::kDisconnected);
  EdgeGraph same = Graph({{"s", "t"}});
  same.sink = same.source;
  EXPECT_EQ(CodeOf([&] { RecognizeSp(same); }), ErrorCode::kInvalidArgument);
}

TEST(RecognizeTest, ReversedArcIsNotSeriesParallel) {
  EXPECT_EQ(CodeOf([] { RecognizeSp(Graph({{"s", "v"}, {"t", "v"}})); }),
            ErrorCode::kNotSeriesParallel);
}

TEST(RoundTripTest, RandomTrees) {
  for (int seed = 0; seed < 300; ++seed) {
    SpGenParams params;
    params.arcs = 1 + seed % 25;
    params.seed = seed;
    const SpTree tree = *GenerateSp(params).tree;
    const SpTree back = RecognizeSp(Expand(tree));
    EXPECT_EQ(back.Canonical(), tree.Canonical()) << "seed " << seed;
    EXPECT_EQ(back.num_arcs(), tree.num_arcs());
  }
}

TEST(RoundTripTest, ExpressionText) {
  for (int seed = 0; seed < 100; ++seed) {
    SpGenParams params;
    params.arcs = 1 + seed % 15;
    params.seed = seed;
    const SpTree tree = *GenerateSp(params).tree;
    std::vector<std::string> ids;
    for (int i = 0; i < tree.num_arcs(); ++i) ids.push_back("e" + std::to_string(i));
    const ParsedSpExpression parsed =
        ParseSpExpression(tree.ToExpression(ids));
    EXPECT_EQ(parsed.arc_ids, ids);
    EXPECT_EQ(parsed.tree.ToExpression(ids), tree.ToExpression(ids));
  }
}

}  // namespace
}  // namespace bmfni
