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

#ifndef STARCUT_GRAPH_HPP_
#define STARCUT_GRAPH_HPP_

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "starcut/vertex.hpp"
#include "starcut/vertex_set.hpp"

namespace starcut {

enum class Family { kQ, kFQ };

// "Q" / "FQ"
std::string_view family_name(Family f);
// Accepts q, Q, fq, FQ. Throws kMalformedInput.
Family parse_family(std::string_view text);

// Q_n or FQ_n with implicit adjacency: labels at Hamming distance 1, plus
// complementary labels for the folded family.
class Graph {
 public:
  Graph(Family family, Dimension dim) : family_(family), dim_(dim) {}
  Graph(Family family, int n) : Graph(family, Dimension(n)) {}

  Family family() const { return family_; }
  Dimension dim() const { return dim_; }
  int n() const { return dim_.value(); }
  std::uint32_t vertex_count() const { return dim_.vertex_count(); }
  int degree() const { return family_ == Family::kQ ? n() : n() + 1; }

  bool contains(Vertex v) const { return v.label() < vertex_count(); }
  void check_vertex(Vertex v) const;

  bool adjacent(Vertex a, Vertex b) const;

  // Dimension 1..n neighbours in order, then ū for FQ.
  std::vector<Vertex> neighbor_list(Vertex v) const;

  // N(v). Throws kInvalidVertex.
  VertexSet neighbors(Vertex v) const;

  // N(A) = (union of N(x), x in A) minus A.
  VertexSet neighborhood(const VertexSet& a) const;

  // Union of N(x) over x in A, without removing A.
  VertexSet expand(const VertexSet& a) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  Family family_;
  Dimension dim_;
};

// Components of g - removed, ordered by size then smallest label. Empty when
// nothing survives.
std::vector<VertexSet> components_after_removal(const Graph& g,
                                                const VertexSet& removed);

// Length of a shortest odd cycle, nullopt when g is bipartite.
std::optional<int> odd_girth(const Graph& g);

// Classical vertex connectivity, exhaustive over anchored components.
// Throws kTooLarge for n > 6.
int min_vertex_cut(const Graph& g);

// Lazily yields every connected vertex set of a given size exactly once, in
// a fixed order. With an anchor, only sets containing it are produced.
class ConnectedSubgraphEnumerator {
 public:
  // Throws kSizeOutOfRange unless 1 <= size <= 2^n; kInvalidVertex for a bad
  // anchor.
  ConnectedSubgraphEnumerator(const Graph& g, std::uint32_t size,
                              std::optional<Vertex> anchor = std::nullopt);

  std::optional<VertexSet> next();

 private:
  struct Frame {
    std::uint32_t vertex;
    bool excluded;  // false: vertex currently included
  };

  bool start_root();
  void end_root();
  std::optional<std::uint32_t> pick_frontier() const;
  VertexSet current() const;

  Graph g_;
  std::uint32_t size_;
  std::optional<Vertex> anchor_;
  std::uint32_t next_root_ = 0;
  std::uint32_t root_ = 0;
  bool root_active_ = false;
  bool descend_ = false;
  bool done_ = false;

  // Per-label state: 0 free, 1 member, 2 excluded. Labels below the root are
  // implicitly excluded when no anchor is given.
  std::vector<std::uint8_t> state_;
  std::vector<std::uint32_t> members_;
  std::vector<Frame> stack_;
};

}  // namespace starcut

#endif  // STARCUT_GRAPH_HPP_
