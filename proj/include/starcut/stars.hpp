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

#ifndef STARCUT_STARS_HPP_
#define STARCUT_STARS_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "starcut/graph.hpp"
#include "starcut/vertex.hpp"
#include "starcut/vertex_set.hpp"

namespace starcut {

// Structure cuts use members isomorphic to K_{1,r}; substructure cuts allow
// any connected subgraph of it, i.e. K_{1,r'} with 0 <= r' <= r.
enum class CutMode { kStructure, kSubstructure };

std::string_view mode_name(CutMode m);
// "structure" / "substructure". Throws kMalformedInput.
CutMode parse_mode(std::string_view text);

// A claimed K_{1,r'} subgraph: center plus ordered leaves. r' = 0 is a single
// vertex, r' = 1 an edge.
struct StarEmbedding {
  Vertex center;
  std::vector<Vertex> leaves;

  int leaf_count() const { return static_cast<int>(leaves.size()); }
  VertexSet vertex_set(Dimension n) const;

  friend bool operator==(const StarEmbedding&, const StarEmbedding&) = default;
};

enum class StarViolationKind {
  kInvalidVertex,
  kLeafIsCenter,
  kDuplicateLeaf,
  kNotAdjacent,
};

struct StarViolation {
  StarViolationKind kind;
  std::size_t leaf_index;  // unused for an invalid center
  Vertex vertex;

  std::string describe(Dimension n) const;
};

// nullopt when s is a star of g; otherwise the first failing leaf.
std::optional<StarViolation> validate_star(const Graph& g,
                                           const StarEmbedding& s);

// Stars whose vertex union is a candidate separator. Members may overlap.
struct CutFamily {
  Graph graph;
  std::vector<StarEmbedding> members;

  VertexSet removal_set() const;

  friend bool operator==(const CutFamily&, const CutFamily&) = default;
};

// Lemma-style construction for Q_n isolating 0...0 with ceil(n/2) copies of
// K_{1,r}. Requires n >= 3 and 2 <= r <= n; (2, 2) throws kNoCutKnown, other
// inputs outside the range throw kUnsupported.
CutFamily build_qn_cut(int n, int r);

// Same for FQ_n with ceil((n+1)/2) copies of K_{1,r}, n >= 3, 2 <= r <= n+1.
// The vertex u^{1,n} always survives the removal.
CutFamily build_fqn_cut(int n, int r);

struct IntersectingPair {
  std::size_t first;   // 0-based member index
  std::size_t second;  // first < second
  VertexSet shared;
};

struct IntersectionReport {
  std::vector<IntersectingPair> pairs;

  bool empty() const { return pairs.empty(); }
};

// All nonempty pairwise vertex intersections, ordered by (first, second).
IntersectionReport family_intersections(const CutFamily& f);

}  // namespace starcut

#endif  // STARCUT_STARS_HPP_
