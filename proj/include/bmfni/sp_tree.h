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

// Decomposition trees of two-terminal series-parallel graphs.
//
// An SpTree is a binary tree whose leaves are arcs and whose internal nodes
// are series or parallel compositions. Nodes are stored in post-order, so
// children always precede their parent, the root is the last node, and the
// subtree of node v occupies the contiguous index range
// [v - 2 * arc_count(v) + 2, v].
//
// The SP-expression grammar accepted by ParseSpExpression is
//
//   expr := "arc(" id ")" | "S(" expr ("," expr)+ ")" | "P(" expr ("," expr)+ ")"
//   id   := [A-Za-z0-9_.-]+
//
// with arbitrary whitespace between tokens. N-ary compositions are folded
// into binary nodes, left-associatively unless requested otherwise.

#ifndef BMFNI_SP_TREE_H_
#define BMFNI_SP_TREE_H_

#include <string>
#include <string_view>
#include <vector>

#include "bmfni/errors.h"

namespace bmfni {

// Directed multigraph given as an arc list. Edge::arc is the arc index.
struct EdgeGraph {
  struct Edge {
    int arc = 0;
    int tail = 0;
    int head = 0;
  };
  std::vector<Edge> edges;
  std::vector<std::string> vertex_names;
  int source = 0;
  int sink = 1;

  int num_vertices() const { return static_cast<int>(vertex_names.size()); }
};

class SpTree {
 public:
  enum class Kind { kPrimitive, kSeries, kParallel };

  struct Node {
    Kind kind = Kind::kPrimitive;
    int arc = -1;  // primitive only
    int left = -1;
    int right = -1;
    int arc_count = 1;
    // Terminal vertex ids of the subgraph, numbered as in Expand().
    int source = 0;
    int sink = 1;
  };

  SpTree() = default;

  // Builds a tree from nodes in arbitrary order (children referenced by
  // index into `nodes`). Renumbers into post-order and fills arc counts and
  // terminal labels. Throws kInvalidArgument on malformed structure.
  static SpTree FromNodes(const std::vector<Node>& nodes, int root);

  static SpTree Primitive(int arc);
  static SpTree Compose(Kind kind, const SpTree& left, const SpTree& right);

  int size() const { return static_cast<int>(nodes_.size()); }
  int root() const { return size() - 1; }
  int num_arcs() const { return nodes_.empty() ? 0 : nodes_.back().arc_count; }
  int num_vertices() const { return num_vertices_; }
  const Node& node(int v) const { return nodes_[v]; }
  const std::vector<Node>& nodes() const { return nodes_; }
  int subtree_begin(int v) const { return v - 2 * nodes_[v].arc_count + 2; }

  // Arc indices of the leaves under v, left to right.
  std::vector<int> LeafArcs(int v) const;
  std::vector<int> LeafArcs() const { return LeafArcs(root()); }

  // Binary SP expression over the given arc ids.
  std::string ToExpression(const std::vector<std::string>& arc_ids) const;

  // Canonical form: nested same-kind compositions flattened, parallel
  // children sorted by minimal arc index. Two trees denote the same
  // decomposition up to association and parallel child order iff their
  // canonical strings are equal.
  std::string Canonical() const;

 private:
  std::vector<Node> nodes_;
  int num_vertices_ = 0;
};

enum class FoldOrder { kLeft, kRight };

struct ParsedSpExpression {
  SpTree tree;
  // Arc ids in order of first appearance; leaf arc indices refer to this.
  std::vector<std::string> arc_ids;
};

// Throws Error(kParse) with the byte offset and expected token, or on
// duplicate arc ids and unary compositions.
ParsedSpExpression ParseSpExpression(std::string_view text,
                                     FoldOrder fold = FoldOrder::kLeft);

// Recognizes a two-terminal series-parallel multigraph by repeated series
// and parallel reductions. Throws kNotSeriesParallel, kDisconnected or
// kInvalidArgument (missing or equal terminals).
SpTree RecognizeSp(const EdgeGraph& graph);

// The multigraph denoted by the tree. Vertex 0 is "s", vertex 1 is "t";
// interior vertices are numbered in pre-order and named "v1", "v2", ...
EdgeGraph Expand(const SpTree& tree);

}  // namespace bmfni

#endif  // BMFNI_SP_TREE_H_
