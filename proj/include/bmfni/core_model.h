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

// Instance data model shared by every solver: arcs with two capacity
// functions and an interdiction cost, interdiction strategies, value pairs
// and the two componentwise orders on them.

#ifndef BMFNI_CORE_MODEL_H_
#define BMFNI_CORE_MODEL_H_

#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "bmfni/errors.h"
#include "bmfni/sp_tree.h"

namespace bmfni {

// Largest admissible m*U. Every sum formed by the solvers stays below it, so
// plain int64 arithmetic never overflows.
inline constexpr std::int64_t kValueCap = std::int64_t{1} << 60;

// Pair of maximum-flow values, one per capacity function.
struct ValuePair {
  std::int64_t v1 = 0;
  std::int64_t v2 = 0;

  friend bool operator==(const ValuePair&, const ValuePair&) = default;
  friend auto operator<=>(const ValuePair&, const ValuePair&) = default;
};

std::ostream& operator<<(std::ostream& os, const ValuePair& p);

enum class Dominance { kStrictlyDominates, kEqual, kIncomparable, kDominated };

// Compares p against q under minimization. kStrictlyDominates means p <= q
// componentwise with p != q.
Dominance Compare(const ValuePair& p, const ValuePair& q);

// p ≦ q: componentwise, equality allowed.
inline bool WeaklyLeq(const ValuePair& p, const ValuePair& q) {
  return p.v1 <= q.v1 && p.v2 <= q.v2;
}

// Fixed-length bit vector over arc indices. Ordered lexicographically with
// arc 0 most significant and 0 < 1 in each position.
class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(int size) : size_(size), words_((size + 63) / 64, 0) {}

  int size() const { return size_; }
  bool test(int i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
  void set(int i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(int i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  int count() const;
  bool none() const;
  bool Intersects(const Bitset& other) const;
  void UnionWith(const Bitset& other);
  std::vector<int> Indices() const;

  friend bool operator==(const Bitset& a, const Bitset& b) = default;
  // Lexicographic order as described above.
  friend bool operator<(const Bitset& a, const Bitset& b);

 private:
  int size_ = 0;
  std::vector<std::uint64_t> words_;
};

// A binary interdiction vector together with its cached total cost.
class Strategy {
 public:
  Strategy() = default;
  explicit Strategy(int num_arcs) : bits_(num_arcs) {}

  int num_arcs() const { return bits_.size(); }
  std::int64_t cost() const { return cost_; }
  const Bitset& bits() const { return bits_; }
  bool interdicts(int arc) const { return bits_.test(arc); }
  bool empty() const { return bits_.none(); }

  void Interdict(int arc, std::int64_t arc_cost);

  // Union of two strategies with disjoint supports. Throws
  // kInvalidArgument if the supports overlap.
  static Strategy Union(const Strategy& a, const Strategy& b);

  friend bool operator==(const Strategy& a, const Strategy& b) {
    return a.bits_ == b.bits_;
  }
  friend bool operator<(const Strategy& a, const Strategy& b) {
    return a.bits_ < b.bits_;
  }

 private:
  Bitset bits_;
  std::int64_t cost_ = 0;
};

struct Arc {
  std::string id;
  std::int64_t u1 = 0;
  std::int64_t u2 = 0;
  std::int64_t cost = 1;
};

enum class CapacityIndex { kFirst = 1, kSecond = 2 };

struct Instance {
  std::vector<Arc> arcs;
  std::int64_t budget = 0;
  // At least one graph representation is present. When both are, they
  // describe the same graph.
  std::optional<SpTree> tree;
  std::optional<EdgeGraph> edges;

  int num_arcs() const { return static_cast<int>(arcs.size()); }
  bool unit_costs() const;
  std::int64_t max_u1() const;
  std::int64_t max_u2() const;
  std::int64_t max_u() const;
  std::int64_t total_cost() const;
  std::int64_t capacity(int arc, CapacityIndex index) const {
    return index == CapacityIndex::kFirst ? arcs[arc].u1 : arcs[arc].u2;
  }

  // Strategy interdicting the given arcs; cost accumulated from the table.
  Strategy MakeStrategy(const std::vector<int>& interdicted) const;
  std::vector<std::string> ArcIds(const Strategy& strategy) const;
};

struct Violation {
  std::string arc_id;  // empty for instance-level violations
  std::string reason;

  friend bool operator==(const Violation&, const Violation&) = default;
};

// Every invariant violation of the instance; empty iff well formed.
std::vector<Violation> Validate(const Instance& instance);

// The instance's decomposition tree, recognized from the edge list when no
// tree was given.
SpTree TreeOf(const Instance& instance);

// The instance's arc-list graph, expanded from the tree when no edge list
// was given.
EdgeGraph EdgeGraphOf(const Instance& instance);

// Throws kValidation listing the violations if Validate() is non-empty.
void ValidateOrThrow(const Instance& instance);

}  // namespace bmfni

#endif  // BMFNI_CORE_MODEL_H_
