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

#include "bmfni/io.h"

#include <cstdio>
#include <map>
#include <set>
#include <unordered_map>

namespace bmfni {
namespace {

[[noreturn]] void Malformed(const std::string& what) {
  throw Error(ErrorCode::kParse, "malformed document: " + what);
}

const Json& Field(const Json& obj, const char* key) {
  if (!obj.is_object() || !obj.contains(key)) {
    Malformed(std::string("missing field '") + key + "'");
  }
  return obj.at(key);
}

std::int64_t IntField(const Json& obj, const char* key) {
  const Json& v = Field(obj, key);
  if (!v.is_number_integer()) {
    Malformed(std::string("field '") + key + "' must be an integer");
  }
  return v.get<std::int64_t>();
}

std::string VertexName(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return std::to_string(v.get<std::int64_t>());
  Malformed("vertex ids must be strings or integers");
}

void CheckFormat(const Json& doc, const char* expected) {
  const Json& format = Field(doc, "format");
  if (!format.is_string() || format.get<std::string>() != expected) {
    Malformed(std::string("format tag must be '") + expected + "'");
  }
}

}  // namespace

Json ParseJsonText(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    // e.byte is 1-based and points just past the offending character.
    const std::size_t offset = e.byte > 0 ? e.byte - 1 : 0;
    int line = 1;
    int column = 1;
    for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw JsonSyntaxError(e.what(), line, column);
  }
}

std::string Digest(const Json& doc) {
  std::uint64_t hash = 0xcbf29ce484222325ull;
  for (unsigned char c : doc.dump()) {
    hash ^= c;
    hash *= 0x100000001b3ull;
  }
  char buf[32];
  std::snprintf(buf, sizeof(buf), "fnv1a64:%016llx",
                static_cast<unsigned long long>(hash));
  return buf;
}

InstanceDocument ReadInstance(const Json& doc, FoldOrder fold) {
  CheckFormat(doc, kInstanceFormat);
  InstanceDocument out;
  Instance& instance = out.instance;
  instance.budget = IntField(doc, "budget");

  const Json& graph = Field(doc, "graph");
  std::vector<std::string> graph_ids;
  if (graph.is_object() && graph.contains("sp")) {
    const Json& sp = graph.at("sp");
    if (!sp.is_string()) Malformed("graph.sp must be a string");
    ParsedSpExpression parsed = ParseSpExpression(sp.get<std::string>(), fold);
    instance.tree = std::move(parsed.tree);
    graph_ids = std::move(parsed.arc_ids);
  } else if (graph.is_object() && graph.contains("edges")) {
    EdgeGraph edges;
    std::unordered_map<std::string, int> vertex_index;
    auto vertex = [&](const std::string& name) {
      auto [it, inserted] = vertex_index.emplace(name, edges.num_vertices());
      if (inserted) edges.vertex_names.push_back(name);
      return it->second;
    };
    edges.source = vertex(VertexName(Field(graph, "source")));
    edges.sink = vertex(VertexName(Field(graph, "sink")));
    const Json& list = graph.at("edges");
    if (!list.is_array()) Malformed("graph.edges must be an array");
    std::set<std::string> seen;
    for (const Json& e : list) {
      const Json& id = Field(e, "id");
      if (!id.is_string()) Malformed("edge ids must be strings");
      const std::string name = id.get<std::string>();
      if (!seen.insert(name).second) {
        throw Error(ErrorCode::kValidation, "duplicate arc id '" + name + "'");
      }
      const int tail = vertex(VertexName(Field(e, "tail")));
      const int head = vertex(VertexName(Field(e, "head")));
      edges.edges.push_back({static_cast<int>(graph_ids.size()), tail, head});
      graph_ids.push_back(name);
    }
    instance.edges = std::move(edges);
  } else {
    Malformed("graph must contain 'sp' or 'edges'");
  }

  const Json& arcs = Field(doc, "arcs");
  if (!arcs.is_object()) Malformed("arcs must be an object");
  for (const std::string& id : graph_ids) {
    if (!arcs.contains(id)) {
      throw Error(ErrorCode::kValidation,
                  "arc '" + id + "' has no entry in the arcs table");
    }
    const Json& entry = arcs.at(id);
    instance.arcs.push_back({id, IntField(entry, "u1"), IntField(entry, "u2"),
                             IntField(entry, "c")});
  }
  if (arcs.size() != graph_ids.size()) {
    const std::set<std::string> known(graph_ids.begin(), graph_ids.end());
    for (const auto& [id, value] : arcs.items()) {
      if (!known.count(id)) {
        throw Error(ErrorCode::kValidation,
                    "arcs table entry '" + id + "' is not in the graph");
      }
    }
  }

  if (doc.contains("threshold")) {
    const Json& k = doc.at("threshold");
    if (!k.is_array() || k.size() != 2 || !k[0].is_number_integer() ||
        !k[1].is_number_integer()) {
      Malformed("threshold must be [K1, K2]");
    }
    out.threshold = ValuePair{k[0].get<std::int64_t>(), k[1].get<std::int64_t>()};
  }
  out.digest = Digest(doc);
  return out;
}

Json InstanceToJson(const Instance& instance,
                    const std::optional<ValuePair>& threshold) {
  Json doc;
  doc["format"] = kInstanceFormat;
  std::vector<std::string> ids;
  for (const Arc& a : instance.arcs) ids.push_back(a.id);
  if (instance.tree) {
    doc["graph"] = {{"sp", instance.tree->ToExpression(ids)}};
  } else if (instance.edges) {
    const EdgeGraph& g = *instance.edges;
    Json edges = Json::array();
    for (const auto& e : g.edges) {
      edges.push_back({{"id", ids.at(e.arc)},
                       {"tail", g.vertex_names.at(e.tail)},
                       {"head", g.vertex_names.at(e.head)}});
    }
    doc["graph"] = {{"edges", edges},
                    {"source", g.vertex_names.at(g.source)},
                    {"sink", g.vertex_names.at(g.sink)}};
  }
  Json arcs = Json::object();
  for (const Arc& a : instance.arcs) {
    arcs[a.id] = {{"u1", a.u1}, {"u2", a.u2}, {"c", a.cost}};
  }
  doc["arcs"] = arcs;
  doc["budget"] = instance.budget;
  if (threshold) doc["threshold"] = {threshold->v1, threshold->v2};
  return doc;
}

KnapsackDecisionInstance ReadKnapsackDecision(const Json& doc) {
  CheckFormat(doc, kInstanceFormat);
  const Json& k = Field(doc, "knapsack");
  KnapsackDecisionInstance out;
  const Json& items = Field(k, "items");
  if (!items.is_array()) Malformed("knapsack.items must be an array");
  for (const Json& item : items) {
    out.items.push_back({IntField(item, "p"), IntField(item, "w")});
  }
  out.profit_target = IntField(k, "P");
  out.weight_limit = IntField(k, "W");
  return out;
}

BiKnapsackInstance ReadBiKnapsack(const Json& doc) {
  CheckFormat(doc, kInstanceFormat);
  const Json& k = Field(doc, "knapsack");
  BiKnapsackInstance out;
  const Json& items = Field(k, "items");
  if (!items.is_array()) Malformed("knapsack.items must be an array");
  for (const Json& item : items) {
    out.items.push_back(
        {IntField(item, "p1"), IntField(item, "p2"), IntField(item, "w")});
  }
  out.capacity = IntField(k, "capacity");
  return out;
}

Json KnapsackDecisionToJson(const KnapsackDecisionInstance& knapsack) {
  Json items = Json::array();
  for (const KnapsackItem& item : knapsack.items) {
    items.push_back({{"p", item.p}, {"w", item.w}});
  }
  return {{"format", kInstanceFormat},
          {"knapsack",
           {{"items", items},
            {"P", knapsack.profit_target},
            {"W", knapsack.weight_limit}}}};
}

Json FrontToJson(const Instance& instance, const FrontDocument& front) {
  Json points = Json::array();
  for (const LabeledPoint& p : front.points) {
    points.push_back({{"v1", p.value.v1},
                      {"v2", p.value.v2},
                      {"strategy", instance.ArcIds(p.witness)},
                      {"cost", p.witness.cost()}});
  }
  return {{"format", kFrontFormat},
          {"solver", front.solver},
          {"parameters", front.parameters},
          {"instance_digest", front.instance_digest},
          {"points", points},
          {"timing", {{"wall_ms", front.wall_ms}}}};
}

FrontDocument ReadFront(const Json& doc, const Instance& instance) {
  CheckFormat(doc, kFrontFormat);
  FrontDocument out;
  const Json& solver = Field(doc, "solver");
  if (solver.is_string()) out.solver = solver.get<std::string>();
  if (doc.contains("parameters")) out.parameters = doc.at("parameters");
  if (doc.contains("instance_digest") && doc.at("instance_digest").is_string()) {
    out.instance_digest = doc.at("instance_digest").get<std::string>();
  }
  std::unordered_map<std::string, int> index;
  for (int a = 0; a < instance.num_arcs(); ++a) index[instance.arcs[a].id] = a;
  const Json& points = Field(doc, "points");
  if (!points.is_array()) Malformed("points must be an array");
  for (const Json& p : points) {
    std::vector<int> arcs;
    const Json& strategy = Field(p, "strategy");
    if (!strategy.is_array()) Malformed("strategy must be an array");
    for (const Json& id : strategy) {
      if (!id.is_string() || !index.count(id.get<std::string>())) {
        throw Error(ErrorCode::kValidation,
                    "front references an unknown arc " + id.dump());
      }
      arcs.push_back(index.at(id.get<std::string>()));
    }
    out.points.push_back({{IntField(p, "v1"), IntField(p, "v2")},
                          instance.MakeStrategy(arcs)});
  }
  if (doc.contains("timing") && doc.at("timing").contains("wall_ms")) {
    out.wall_ms = doc.at("timing").at("wall_ms").get<double>();
  }
  return out;
}

}  // namespace bmfni
