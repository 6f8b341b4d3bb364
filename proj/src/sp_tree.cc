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

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>
#include <unordered_map>
#include <utility>

namespace bmfni {

SpTree SpTree::FromNodes(const std::vector<Node>& nodes, int root) {
  const int n = static_cast<int>(nodes.size());
  if (root < 0 || root >= n) {
    throw Error(ErrorCode::kInvalidArgument, "tree root out of range");
  }
  // Iterative post-order; `visited` guards against shared or cyclic children.
  std::vector<int> order;
  order.reserve(n);
  std::vector<char> visited(n, 0);
  std::vector<std::pair<int, bool>> stack = {{root, false}};
  while (!stack.empty()) {
    auto [v, expanded] = stack.back();
    stack.pop_back();
    if (expanded) {
      order.push_back(v);
      continue;
    }
    if (v < 0 || v >= n || visited[v]) {
      throw Error(ErrorCode::kInvalidArgument, "malformed decomposition tree");
    }
    visited[v] = 1;
    stack.push_back({v, true});
    const Node& node = nodes[v];
    if (node.kind == Kind::kPrimitive) {
      if (node.arc < 0) {
        throw Error(ErrorCode::kInvalidArgument, "primitive node without arc");
      }
      continue;
    }
    stack.push_back({node.right, false});
    stack.push_back({node.left, false});
  }

  std::vector<int> renumber(n, -1);
  for (int i = 0; i < static_cast<int>(order.size()); ++i) {
    renumber[order[i]] = i;
  }
  SpTree tree;
  tree.nodes_.reserve(order.size());
  for (int old : order) {
    Node node = nodes[old];
    if (node.kind == Kind::kPrimitive) {
      node.left = node.right = -1;
      node.arc_count = 1;
    } else {
      node.arc = -1;
      node.left = renumber[node.left];
      node.right = renumber[node.right];
      node.arc_count = tree.nodes_[node.left].arc_count +
                       tree.nodes_[node.right].arc_count;
    }
    tree.nodes_.push_back(node);
  }

  // Terminal labels in pre-order: root is (0, 1), each series node
  // introduces one fresh middle vertex.
  int next_vertex = 2;
  tree.nodes_.back().source = 0;
  tree.nodes_.back().sink = 1;
  std::vector<int> pre = {tree.root()};
  while (!pre.empty()) {
    const int v = pre.back();
    pre.pop_back();
    Node& node = tree.nodes_[v];
    if (node.kind == Kind::kPrimitive) continue;
    Node& left = tree.nodes_[node.left];
    Node& right = tree.nodes_[node.right];
    if (node.kind == Kind::kSeries) {
      const int mid = next_vertex++;
      left.source = node.source;
      left.sink = mid;
      right.source = mid;
      right.sink = node.sink;
    } else {
      left.source = right.source = node.source;
      left.sink = right.sink = node.sink;
    }
    pre.push_back(node.right);
    pre.push_back(node.left);
  }
  tree.num_vertices_ = next_vertex;
  return tree;
}

SpTree SpTree::Primitive(int arc) {
  Node node;
  node.kind = Kind::kPrimitive;
  node.arc = arc;
  return FromNodes({node}, 0);
}

SpTree SpTree::Compose(Kind kind, const SpTree& left, const SpTree& right) {
  if (kind == Kind::kPrimitive || left.size() == 0 || right.size() == 0) {
    throw Error(ErrorCode::kInvalidArgument, "invalid composition");
  }
  std::vector<Node> nodes = left.nodes_;
  const int offset = left.size();
  for (Node node : right.nodes_) {
    if (node.kind != Kind::kPrimitive) {
      node.left += offset;
      node.right += offset;
    }
    nodes.push_back(node);
  }
  Node top;
  top.kind = kind;
  top.left = left.root();
  top.right = offset + right.root();
  nodes.push_back(top);
  return FromNodes(nodes, static_cast<int>(nodes.size()) - 1);
}

std::vector<int> SpTree::LeafArcs(int v) const {
  std::vector<int> arcs;
  if (nodes_.empty()) return arcs;
  for (int i = subtree_begin(v); i <= v; ++i) {
    if (nodes_[i].kind == Kind::kPrimitive) arcs.push_back(nodes_[i].arc);
  }
  return arcs;
}

namespace {

void WriteExpression(const SpTree& tree, int v,
                     const std::vector<std::string>& ids, std::string* out) {
  const SpTree::Node& node = tree.node(v);
  if (node.kind == SpTree::Kind::kPrimitive) {
    *out += "arc(";
    *out += ids.at(node.arc);
    *out += ")";
    return;
  }
  *out += node.kind == SpTree::Kind::kSeries ? "S(" : "P(";
  WriteExpression(tree, node.left, ids, out);
  *out += ",";
  WriteExpression(tree, node.right, ids, out);
  *out += ")";
}

struct CanonicalForm {
  std::string text;
  int min_arc;
};

// Children of the maximal same-kind chain rooted at v, left to right.
void CollectChain(const SpTree& tree, int v, SpTree::Kind kind,
                  std::vector<int>* out) {
  const SpTree::Node& node = tree.node(v);
  if (node.kind != kind) {
    out->push_back(v);
    return;
  }
  CollectChain(tree, node.left, kind, out);
  CollectChain(tree, node.right, kind, out);
}

CanonicalForm BuildCanonical(const SpTree& tree, int v) {
  const SpTree::Node& node = tree.node(v);
  if (node.kind == SpTree::Kind::kPrimitive) {
    return {"a" + std::to_string(node.arc), node.arc};
  }
  std::vector<int> chain;
  CollectChain(tree, v, node.kind, &chain);
  std::vector<CanonicalForm> parts;
  for (int child : chain) parts.push_back(BuildCanonical(tree, child));
  if (node.kind == SpTree::Kind::kParallel) {
    std::sort(parts.begin(), parts.end(),
              [](const CanonicalForm& a, const CanonicalForm& b) {
                return a.min_arc < b.min_arc;
              });
  }
  CanonicalForm out{node.kind == SpTree::Kind::kSeries ? "S(" : "P(",
                    parts.front().min_arc};
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) out.text += ",";
    out.text += parts[i].text;
    out.min_arc = std::min(out.min_arc, parts[i].min_arc);
  }
  out.text += ")";
  return out;
}

}  // namespace

std::string SpTree::ToExpression(const std::vector<std::string>& arc_ids) const {
  std::string out;
  if (!nodes_.empty()) WriteExpression(*this, root(), arc_ids, &out);
  return out;
}

std::string SpTree::Canonical() const {
  if (nodes_.empty()) return "";
  return BuildCanonical(*this, root()).text;
}

// ---------------------------------------------------------------------------
// Expression parser.

namespace {

class ExpressionParser {
 public:
  ExpressionParser(std::string_view text, FoldOrder fold)
      : text_(text), fold_(fold) {}

  ParsedSpExpression Parse() {
    const int root = ParseExpr();
    SkipSpace();
    if (pos_ != text_.size()) Fail("end of input");
    ParsedSpExpression out;
    out.tree = SpTree::FromNodes(nodes_, root);
    out.arc_ids = std::move(ids_);
    return out;
  }

 private:
  [[noreturn]] void Fail(const std::string& expected) {
    std::ostringstream msg;
    msg << "SP expression syntax error at offset " << pos_ << ": expected "
        << expected;
    throw Error(ErrorCode::kParse, msg.str());
  }

  void SkipSpace() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  bool Consume(std::string_view token) {
    SkipSpace();
    if (text_.substr(pos_, token.size()) == token) {
      pos_ += token.size();
      return true;
    }
    return false;
  }

  void Expect(std::string_view token) {
    if (!Consume(token)) Fail("'" + std::string(token) + "'");
  }

  static bool IsIdChar(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' ||
           c == '.' || c == '-';
  }

  int ParseExpr() {
    SkipSpace();
    if (Consume("arc")) {
      Expect("(");
      SkipSpace();
      const std::size_t begin = pos_;
      while (pos_ < text_.size() && IsIdChar(text_[pos_])) ++pos_;
      if (pos_ == begin) Fail("arc id");
      std::string id(text_.substr(begin, pos_ - begin));
      Expect(")");
      if (!seen_.emplace(id, static_cast<int>(ids_.size())).second) {
        throw Error(ErrorCode::kParse, "duplicate arc id '" + id + "'");
      }
      ids_.push_back(id);
      SpTree::Node node;
      node.kind = SpTree::Kind::kPrimitive;
      node.arc = static_cast<int>(ids_.size()) - 1;
      nodes_.push_back(node);
      return static_cast<int>(nodes_.size()) - 1;
    }
    SpTree::Kind kind;
    if (Consume("S")) {
      kind = SpTree::Kind::kSeries;
    } else if (Consume("P")) {
      kind = SpTree::Kind::kParallel;
    } else {
      Fail("'arc', 'S' or 'P'");
    }
    const std::size_t open = pos_;
    Expect("(");
    std::vector<int> children = {ParseExpr()};
    while (Consume(",")) children.push_back(ParseExpr());
    Expect(")");
    if (children.size() < 2) {
      std::ostringstream msg;
      msg << "unary composition at offset " << open;
      throw Error(ErrorCode::kParse, msg.str());
    }
    return Fold(kind, children);
  }

  int Join(SpTree::Kind kind, int left, int right) {
    SpTree::Node node;
    node.kind = kind;
    node.left = left;
    node.right = right;
    nodes_.push_back(node);
    return static_cast<int>(nodes_.size()) - 1;
  }

  int Fold(SpTree::Kind kind, const std::vector<int>& children) {
    if (fold_ == FoldOrder::kLeft) {
      int acc = children.front();
      for (std::size_t i = 1; i < children.size(); ++i) {
        acc = Join(kind, acc, children[i]);
      }
      return acc;
    }
    int acc = children.back();
    for (std::size_t i = children.size() - 1; i-- > 0;) {
      acc = Join(kind, children[i], acc);
    }
    return acc;
  }

  std::string_view text_;
  FoldOrder fold_;
  std::size_t pos_ = 0;
  std::vector<SpTree::Node> nodes_;
  std::vector<std::string> ids_;
  std::unordered_map<std::string, int> seen_;
};

}  // namespace

ParsedSpExpression ParseSpExpression(std::string_view text, FoldOrder fold) {
  return ExpressionParser(text, fold).Parse();
}

// ---------------------------------------------------------------------------
// Recognition by series and parallel reductions.

namespace {

struct WorkEdge {
  int tail;
  int head;
  int node;
  bool alive = true;
};

void CheckConnected(const EdgeGraph& graph) {
  const int n = graph.num_vertices();
  std::vector<std::vector<int>> adjacent(n);
  for (const auto& e : graph.edges) {
    adjacent[e.tail].push_back(e.head);
    adjacent[e.head].push_back(e.tail);
  }
  if (adjacent[graph.source].empty() || adjacent[graph.sink].empty()) {
    throw Error(ErrorCode::kInvalidArgument,
                "source or sink has no incident arcs");
  }
  std::vector<char> reached(n, 0);
  std::vector<int> queue = {graph.source};
  reached[graph.source] = 1;
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (int w : adjacent[queue[i]]) {
      if (!reached[w]) {
        reached[w] = 1;
        queue.push_back(w);
      }
    }
  }
  if (static_cast<int>(queue.size()) != n) {
    std::ostringstream msg;
    msg << "graph is disconnected: " << (n - static_cast<int>(queue.size()))
        << " vertices unreachable from the source";
    throw Error(ErrorCode::kDisconnected, msg.str());
  }
}

}  // namespace

SpTree RecognizeSp(const EdgeGraph& graph) {
  const int n = graph.num_vertices();
  if (graph.source < 0 || graph.source >= n || graph.sink < 0 ||
      graph.sink >= n) {
    throw Error(ErrorCode::kInvalidArgument, "source or sink absent");
  }
  if (graph.source == graph.sink) {
    throw Error(ErrorCode::kInvalidArgument, "source equals sink");
  }
  if (graph.edges.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "graph has no arcs");
  }
  for (const auto& e : graph.edges) {
    if (e.tail < 0 || e.tail >= n || e.head < 0 || e.head >= n) {
      throw Error(ErrorCode::kInvalidArgument,
                  "edge references an unknown vertex");
    }
  }
  CheckConnected(graph);

  std::vector<SpTree::Node> nodes;
  std::vector<WorkEdge> edges;
  for (const auto& e : graph.edges) {
    SpTree::Node leaf;
    leaf.kind = SpTree::Kind::kPrimitive;
    leaf.arc = e.arc;
    nodes.push_back(leaf);
    edges.push_back({e.tail, e.head, static_cast<int>(nodes.size()) - 1});
  }
  auto join = [&nodes](SpTree::Kind kind, int left, int right) {
    SpTree::Node node;
    node.kind = kind;
    node.left = left;
    node.right = right;
    nodes.push_back(node);
    return static_cast<int>(nodes.size()) - 1;
  };

  int alive = static_cast<int>(edges.size());
  bool changed = true;
  while (changed && alive > 1) {
    changed = false;

    // Parallel reductions: fold each bundle of same-endpoint edges into its
    // lowest-numbered edge.
    std::map<std::pair<int, int>, int> first_edge;
    for (int i = 0; i < static_cast<int>(edges.size()); ++i) {
      WorkEdge& e = edges[i];
      if (!e.alive) continue;
      auto [it, inserted] = first_edge.emplace(std::make_pair(e.tail, e.head), i);
      if (inserted) continue;
      WorkEdge& keep = edges[it->second];
      keep.node = join(SpTree::Kind::kParallel, keep.node, e.node);
      e.alive = false;
      --alive;
      changed = true;
    }

    // Series reductions at interior vertices with one incoming and one
    // outgoing edge. Each edge takes part in at most one reduction per pass.
    std::vector<int> in_count(n, 0), out_count(n, 0), in_edge(n, -1),
        out_edge(n, -1);
    for (int i = 0; i < static_cast<int>(edges.size()); ++i) {
      const WorkEdge& e = edges[i];
      if (!e.alive) continue;
      ++out_count[e.tail];
      out_edge[e.tail] = i;
      ++in_count[e.head];
      in_edge[e.head] = i;
    }
    std::vector<char> touched(edges.size(), 0);
    for (int v = 0; v < n; ++v) {
      if (v == graph.source || v == graph.sink) continue;
      if (in_count[v] != 1 || out_count[v] != 1) continue;
      const int a = in_edge[v];
      const int b = out_edge[v];
      if (a == b || touched[a] || touched[b]) continue;
      WorkEdge& first = edges[a];
      WorkEdge& second = edges[b];
      if (first.tail == v || second.head == v) continue;
      first.node = join(SpTree::Kind::kSeries, first.node, second.node);
      first.head = second.head;
      second.alive = false;
      touched[a] = touched[b] = 1;
      --alive;
      changed = true;
    }
  }

  int last = -1;
  for (int i = 0; i < static_cast<int>(edges.size()); ++i) {
    if (edges[i].alive) last = i;
  }
  if (alive != 1 || edges[last].tail != graph.source ||
      edges[last].head != graph.sink) {
    std::ostringstream msg;
    msg << "graph is not two-terminal series-parallel: " << alive
        << " arcs remain after reduction";
    throw Error(ErrorCode::kNotSeriesParallel, msg.str());
  }
  return SpTree::FromNodes(nodes, edges[last].node);
}

EdgeGraph Expand(const SpTree& tree) {
  EdgeGraph graph;
  graph.source = 0;
  graph.sink = 1;
  graph.vertex_names = {"s", "t"};
  for (int v = 2; v < tree.num_vertices(); ++v) {
    graph.vertex_names.push_back("v" + std::to_string(v - 1));
  }
  for (const SpTree::Node& node : tree.nodes()) {
    if (node.kind != SpTree::Kind::kPrimitive) continue;
    graph.edges.push_back({node.arc, node.source, node.sink});
  }
  return graph;
}

}  // namespace bmfni
