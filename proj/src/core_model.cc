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

#include "bmfni/core_model.h"

#include <algorithm>
#include <bit>
#include <map>
#include <set>
#include <sstream>

namespace bmfni {

const char* ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument:
      return "InvalidArgument";
    case ErrorCode::kParse:
      return "ParseError";
    case ErrorCode::kValidation:
      return "ValidationError";
    case ErrorCode::kNotSeriesParallel:
      return "NotSeriesParallel";
    case ErrorCode::kDisconnected:
      return "Disconnected";
    case ErrorCode::kNonUnitCosts:
      return "NonUnitCosts";
    case ErrorCode::kTooLarge:
      return "TooLarge";
    case ErrorCode::kNotParallelGraph:
      return "NotParallelGraph";
    case ErrorCode::kOverflow:
      return "Overflow";
  }
  return "Unknown";
}

std::ostream& operator<<(std::ostream& os, const ValuePair& p) {
  return os << "(" << p.v1 << "," << p.v2 << ")";
}

Dominance Compare(const ValuePair& p, const ValuePair& q) {
  if (p == q) return Dominance::kEqual;
  if (WeaklyLeq(p, q)) return Dominance::kStrictlyDominates;
  if (WeaklyLeq(q, p)) return Dominance::kDominated;
  return Dominance::kIncomparable;
}

int Bitset::count() const {
  int total = 0;
  for (std::uint64_t w : words_) total += std::popcount(w);
  return total;
}

bool Bitset::none() const {
  return std::all_of(words_.begin(), words_.end(),
                     [](std::uint64_t w) { return w == 0; });
}

bool Bitset::Intersects(const Bitset& other) const {
  const std::size_t n = std::min(words_.size(), other.words_.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (words_[i] & other.words_[i]) return true;
  }
  return false;
}

void Bitset::UnionWith(const Bitset& other) {
  if (other.size_ > size_) {
    size_ = other.size_;
    words_.resize(other.words_.size(), 0);
  }
  for (std::size_t i = 0; i < other.words_.size(); ++i) {
    words_[i] |= other.words_[i];
  }
}

std::vector<int> Bitset::Indices() const {
  std::vector<int> out;
  for (std::size_t w = 0; w < words_.size(); ++w) {
    std::uint64_t bits = words_[w];
    while (bits != 0) {
      out.push_back(static_cast<int>(w * 64) + std::countr_zero(bits));
      bits &= bits - 1;
    }
  }
  return out;
}

bool operator<(const Bitset& a, const Bitset& b) {
  const std::size_t n = std::max(a.words_.size(), b.words_.size());
  for (std::size_t i = 0; i < n; ++i) {
    const std::uint64_t wa = i < a.words_.size() ? a.words_[i] : 0;
    const std::uint64_t wb = i < b.words_.size() ? b.words_[i] : 0;
    if (wa != wb) {
      // The lowest differing bit is the first differing arc.
      const std::uint64_t first = (wa ^ wb) & ~((wa ^ wb) - 1);
      return (wa & first) == 0;
    }
  }
  return false;
}

void Strategy::Interdict(int arc, std::int64_t arc_cost) {
  if (bits_.test(arc)) return;
  bits_.set(arc);
  cost_ += arc_cost;
}

Strategy Strategy::Union(const Strategy& a, const Strategy& b) {
  if (a.bits_.Intersects(b.bits_)) {
    throw Error(ErrorCode::kInvalidArgument,
                "strategy union over overlapping arc sets");
  }
  Strategy out = a;
  out.bits_.UnionWith(b.bits_);
  out.cost_ += b.cost_;
  return out;
}

bool Instance::unit_costs() const {
  return std::all_of(arcs.begin(), arcs.end(),
                     [](const Arc& a) { return a.cost == 1; });
}

std::int64_t Instance::max_u1() const {
  std::int64_t best = 0;
  for (const Arc& a : arcs) best = std::max(best, a.u1);
  return best;
}

std::int64_t Instance::max_u2() const {
  std::int64_t best = 0;
  for (const Arc& a : arcs) best = std::max(best, a.u2);
  return best;
}

std::int64_t Instance::max_u() const { return std::max(max_u1(), max_u2()); }

std::int64_t Instance::total_cost() const {
  std::int64_t total = 0;
  for (const Arc& a : arcs) total += a.cost;
  return total;
}

Strategy Instance::MakeStrategy(const std::vector<int>& interdicted) const {
  Strategy s(num_arcs());
  for (int arc : interdicted) s.Interdict(arc, arcs[arc].cost);
  return s;
}

std::vector<std::string> Instance::ArcIds(const Strategy& strategy) const {
  std::vector<std::string> ids;
  for (int arc : strategy.bits().Indices()) ids.push_back(arcs[arc].id);
  return ids;
}

namespace {

void CheckArcCoverage(const std::vector<int>& arcs_in_graph, int num_arcs,
                      const std::vector<Arc>& arcs, const char* what,
                      std::vector<Violation>* out) {
  std::vector<int> seen(num_arcs, 0);
  for (int arc : arcs_in_graph) {
    if (arc < 0 || arc >= num_arcs) {
      out->push_back({"", std::string(what) + " references an unknown arc"});
      continue;
    }
    ++seen[arc];
  }
  for (int i = 0; i < num_arcs; ++i) {
    if (seen[i] == 0) {
      out->push_back({arcs[i].id, std::string("arc missing from ") + what});
    } else if (seen[i] > 1) {
      out->push_back(
          {arcs[i].id, std::string("arc appears more than once in ") + what});
    }
  }
}

}  // namespace

std::vector<Violation> Validate(const Instance& instance) {
  std::vector<Violation> out;
  const int m = instance.num_arcs();
  if (m == 0) {
    out.push_back({"", "at least one arc required"});
    return out;
  }
  if (instance.budget < 0) out.push_back({"", "budget must be nonnegative"});

  std::set<std::string> ids;
  for (const Arc& a : instance.arcs) {
    if (!ids.insert(a.id).second) out.push_back({a.id, "duplicate arc id"});
    if (a.cost < 1) out.push_back({a.id, "cost must be positive"});
    if (a.u1 < 0 || a.u2 < 0) {
      out.push_back({a.id, "capacity must be nonnegative"});
    }
    if (a.u1 >= kValueCap || a.u2 >= kValueCap || a.cost >= kValueCap) {
      out.push_back({a.id, "value exceeds the 2^60 cap"});
    }
  }

  const std::int64_t u = instance.max_u();
  if (u > 0 && u < kValueCap &&
      static_cast<std::int64_t>(m) > (kValueCap - 1) / u) {
    out.push_back({"", "m*U reaches the 2^60 cap"});
  }
  __int128 total_cost = 0;
  for (const Arc& a : instance.arcs) total_cost += a.cost;
  if (total_cost >= kValueCap) {
    out.push_back({"", "total cost exceeds the 2^60 cap"});
  }

  if (!instance.tree && !instance.edges) {
    out.push_back({"", "instance has no graph"});
  }
  if (instance.tree) {
    CheckArcCoverage(instance.tree->LeafArcs(), m, instance.arcs,
                     "decomposition tree", &out);
  }
  if (instance.edges) {
    std::vector<int> listed;
    for (const auto& e : instance.edges->edges) listed.push_back(e.arc);
    CheckArcCoverage(listed, m, instance.arcs, "edge list", &out);
    const int n = instance.edges->num_vertices();
    for (const auto& e : instance.edges->edges) {
      if (e.tail < 0 || e.tail >= n || e.head < 0 || e.head >= n) {
        out.push_back({"", "edge references an unknown vertex"});
        break;
      }
    }
  }
  return out;
}

void ValidateOrThrow(const Instance& instance) {
  const std::vector<Violation> violations = Validate(instance);
  if (violations.empty()) return;
  std::ostringstream msg;
  msg << "invalid instance:";
  for (const Violation& v : violations) {
    msg << " [";
    if (!v.arc_id.empty()) msg << v.arc_id << ": ";
    msg << v.reason << "]";
  }
  throw Error(ErrorCode::kValidation, msg.str());
}

SpTree TreeOf(const Instance& instance) {
  if (instance.tree) return *instance.tree;
  if (!instance.edges) {
    throw Error(ErrorCode::kValidation, "instance has no graph");
  }
  return RecognizeSp(*instance.edges);
}

EdgeGraph EdgeGraphOf(const Instance& instance) {
  if (instance.edges) return *instance.edges;
  if (!instance.tree) {
    throw Error(ErrorCode::kValidation, "instance has no graph");
  }
  return Expand(*instance.tree);
}

}  // namespace bmfni
