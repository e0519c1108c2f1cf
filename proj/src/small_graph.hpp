// Copyright 2026 The Starcut Authors
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

#ifndef STARCUT_SRC_SMALL_GRAPH_HPP_
#define STARCUT_SRC_SMALL_GRAPH_HPP_

// Internal 128-slot masks and the anchored include/exclude enumeration used
// by every exhaustive search (n <= 7).

#include <cstdint>
#include <vector>

#include "starcut/graph.hpp"
#include "starcut/vertex_set.hpp"

namespace starcut::detail {

struct Mask {
  std::uint64_t lo = 0;
  std::uint64_t hi = 0;

  static Mask bit(std::uint32_t v) {
    Mask m;
    m.set(v);
    return m;
  }

  bool test(std::uint32_t v) const {
    return v < 64 ? ((lo >> v) & 1u) : ((hi >> (v - 64)) & 1u);
  }
  void set(std::uint32_t v) {
    if (v < 64) lo |= std::uint64_t{1} << v; else hi |= std::uint64_t{1} << (v - 64);
  }
  void reset(std::uint32_t v) {
    if (v < 64) lo &= ~(std::uint64_t{1} << v); else hi &= ~(std::uint64_t{1} << (v - 64));
  }
  int count() const { return __builtin_popcountll(lo) + __builtin_popcountll(hi); }
  bool none() const { return (lo | hi) == 0; }
  bool any() const { return !none(); }
  std::uint32_t lowest() const {
    return lo != 0 ? __builtin_ctzll(lo) : 64 + __builtin_ctzll(hi);
  }

  template <typename Fn>
  void for_each(Fn&& fn) const {
    for (std::uint64_t b = lo; b != 0; b &= b - 1) fn(std::uint32_t(__builtin_ctzll(b)));
    for (std::uint64_t b = hi; b != 0; b &= b - 1) fn(std::uint32_t(64 + __builtin_ctzll(b)));
  }

  Mask& operator|=(Mask o) { lo |= o.lo; hi |= o.hi; return *this; }
  Mask& operator&=(Mask o) { lo &= o.lo; hi &= o.hi; return *this; }
  friend Mask operator|(Mask a, Mask b) { return a |= b; }
  friend Mask operator&(Mask a, Mask b) { return a &= b; }
  friend Mask andnot(Mask a, Mask b) { return Mask{a.lo & ~b.lo, a.hi & ~b.hi}; }
  friend bool operator==(Mask, Mask) = default;
  friend bool operator<(Mask a, Mask b) {
    return a.hi != b.hi ? a.hi < b.hi : a.lo < b.lo;
  }
};

class SmallGraph {
 public:
  static constexpr int kMaxDimension = 7;

  // Throws kTooLarge for n > 7.
  explicit SmallGraph(const Graph& g);

  const Graph& graph() const { return g_; }
  std::uint32_t size() const { return g_.vertex_count(); }
  const Mask& nbr(std::uint32_t v) const { return nbr_[v]; }
  Mask all() const { return all_; }

  Mask neighborhood(Mask c) const {
    Mask out;
    c.for_each([&](std::uint32_t v) { out |= nbr_[v]; });
    return andnot(out, c);
  }

  // Vertices of `alive` reachable from seed inside `alive`.
  Mask component_of(Mask alive, std::uint32_t seed) const;
  bool connected(Mask set) const;

  Mask to_mask(const VertexSet& s) const;
  VertexSet to_set(Mask m) const;

 private:
  Graph g_;
  std::vector<Mask> nbr_;
  Mask all_;
};

// One node of the include/exclude tree: C is the current connected set, X the
// excluded neighbours (always X subset of N(C)), F the undecided frontier
// N(C) \ X.
struct GrowthNode {
  Mask members;
  Mask excluded;
  Mask frontier;
};

inline GrowthNode root_node(const SmallGraph& g, std::uint32_t anchor) {
  return GrowthNode{Mask::bit(anchor), Mask{}, g.nbr(anchor)};
}

// Depth-first include/exclude search over connected supersets. Every closed
// set (frontier empty, hence excluded == N(members)) is passed to visit
// exactly once. prune(members, excluded) may cut a subtree; it must be
// monotone since both sets only grow downward. visit returns false to stop.
// Returns false iff stopped.
template <typename Prune, typename Visit>
bool grow_closed(const SmallGraph& g, GrowthNode node, Prune& prune,
                 Visit& visit) {
  if (prune(node.members, node.excluded)) return true;
  if (node.frontier.none()) return visit(node.members, node.excluded);
  const std::uint32_t v = node.frontier.lowest();
  GrowthNode with = node;
  with.members.set(v);
  with.frontier = andnot(node.frontier | g.nbr(v), with.members | node.excluded);
  if (!grow_closed(g, with, prune, visit)) return false;
  GrowthNode without = node;
  without.excluded.set(v);
  without.frontier.reset(v);
  return grow_closed(g, without, prune, visit);
}

// Expands the tree breadth-wise to the given decision depth and returns the
// surviving subtree roots in the order a depth-first walk would meet them.
template <typename Prune>
std::vector<GrowthNode> split_roots(const SmallGraph& g, GrowthNode node,
                                    int depth, Prune& prune) {
  std::vector<GrowthNode> out;
  struct Walker {
    const SmallGraph& g;
    Prune& prune;
    std::vector<GrowthNode>& out;
    void run(const GrowthNode& n, int d) {
      if (prune(n.members, n.excluded)) return;
      if (d == 0 || n.frontier.none()) {
        out.push_back(n);
        return;
      }
      const std::uint32_t v = n.frontier.lowest();
      GrowthNode with = n;
      with.members.set(v);
      with.frontier = andnot(n.frontier | g.nbr(v), with.members | n.excluded);
      run(with, d - 1);
      GrowthNode without = n;
      without.excluded.set(v);
      without.frontier.reset(v);
      run(without, d - 1);
    }
  } walker{g, prune, out};
  walker.run(node, depth);
  return out;
}

}  // namespace starcut::detail

#endif  // STARCUT_SRC_SMALL_GRAPH_HPP_
