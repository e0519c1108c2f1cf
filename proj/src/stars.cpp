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

#include "starcut/stars.hpp"

#include <string>

#include "starcut/errors.hpp"

namespace starcut {
namespace {

std::string pair_text(int n, int r) {
  return "(n=" + std::to_string(n) + ", r=" + std::to_string(r) + ")";
}

// Builds the vertices u^A (and their complements) around u = 0...0, with
// positions reduced into 1..n.
class Labels {
 public:
  explicit Labels(Dimension n) : n_(n) {}

  Vertex u(std::initializer_list<int> positions) const {
    std::uint32_t label = 0;
    for (int p : positions) label ^= std::uint32_t{1} << (wrap_position(p, n_) - 1);
    return Vertex(label);
  }
  Vertex ubar(std::initializer_list<int> positions) const {
    return complement(u(positions), n_);
  }

  // S_i of the hypercube construction: center u^{a,b} (a = 2i-1, b = 2i),
  // leaves u^a, u^b, u^{a,b,2i+j} for j = 1..extra.
  StarEmbedding paired_star(int i, int extra) const {
    const int a = 2 * i - 1;
    const int b = 2 * i;
    StarEmbedding s{u({a, b}), {u({a}), u({b})}};
    for (int j = 1; j <= extra; ++j) {
      const int p = wrap_position(2 * i + j, n_);
      if (p == a || p == b) {
        throw Error(ErrorCode::kInternal,
                    "wrapped position " + std::to_string(p) +
                        " collides with the star's own pair");
      }
      s.leaves.push_back(u({a, b, p}));
    }
    return s;
  }

 private:
  Dimension n_;
};

}  // namespace

std::string_view mode_name(CutMode m) {
  return m == CutMode::kStructure ? "structure" : "substructure";
}

CutMode parse_mode(std::string_view text) {
  if (text == "structure") return CutMode::kStructure;
  if (text == "substructure") return CutMode::kSubstructure;
  throw Error(ErrorCode::kMalformedInput,
              "mode must be structure or substructure, got '" +
                  std::string(text) + "'");
}

VertexSet StarEmbedding::vertex_set(Dimension n) const {
  VertexSet out(n);
  out.insert(center);
  for (Vertex l : leaves) out.insert(l);
  return out;
}

std::string StarViolation::describe(Dimension n) const {
  const std::string v = vertex.label() < n.vertex_count()
                            ? to_bits(vertex, n)
                            : "#" + std::to_string(vertex.label());
  switch (kind) {
    case StarViolationKind::kInvalidVertex:
      return "vertex " + v + " is not in the graph";
    case StarViolationKind::kLeafIsCenter:
      return "leaf " + std::to_string(leaf_index) + " equals the center";
    case StarViolationKind::kDuplicateLeaf:
      return "leaf " + std::to_string(leaf_index) + " (" + v + ") repeats";
    case StarViolationKind::kNotAdjacent:
      return "leaf " + std::to_string(leaf_index) + " (" + v +
             ") is not adjacent to the center";
  }
  return "unknown violation";
}

std::optional<StarViolation> validate_star(const Graph& g,
                                           const StarEmbedding& s) {
  if (!g.contains(s.center)) {
    return StarViolation{StarViolationKind::kInvalidVertex, 0, s.center};
  }
  for (std::size_t i = 0; i < s.leaves.size(); ++i) {
    const Vertex leaf = s.leaves[i];
    if (!g.contains(leaf)) {
      return StarViolation{StarViolationKind::kInvalidVertex, i, leaf};
    }
    if (leaf == s.center) {
      return StarViolation{StarViolationKind::kLeafIsCenter, i, leaf};
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (s.leaves[j] == leaf) {
        return StarViolation{StarViolationKind::kDuplicateLeaf, i, leaf};
      }
    }
    if (!g.adjacent(s.center, leaf)) {
      return StarViolation{StarViolationKind::kNotAdjacent, i, leaf};
    }
  }
  return std::nullopt;
}

VertexSet CutFamily::removal_set() const {
  VertexSet out(graph.dim());
  for (const auto& s : members) {
    out.insert(s.center);
    for (Vertex l : s.leaves) out.insert(l);
  }
  return out;
}

CutFamily build_qn_cut(int n, int r) {
  if (n == 2 && r == 2) {
    throw Error(ErrorCode::kNoCutKnown,
                "Q_2 has no K_{1,2}-structure cut");
  }
  if (n < 3 || n > Dimension::kMax || r < 2 || r > n) {
    throw Error(ErrorCode::kUnsupported,
                "hypercube construction needs n >= 3 and 2 <= r <= n, got " +
                    pair_text(n, r));
  }
  const Dimension dim(n);
  const Labels at(dim);
  CutFamily f{Graph(Family::kQ, dim), {}};
  for (int i = 1; i <= n / 2; ++i) f.members.push_back(at.paired_star(i, r - 2));
  if (n % 2 == 1) {
    // Final star centred at u^{n,1}.
    StarEmbedding last{at.u({n, 1}), {at.u({n})}};
    if (n > r) {
      for (int j = 2; j <= r; ++j) last.leaves.push_back(at.u({n, 1, j}));
    } else {
      last.leaves.push_back(at.u({1}));
      for (int j = 2; j <= r - 1; ++j) last.leaves.push_back(at.u({n, 1, j}));
    }
    f.members.push_back(std::move(last));
  }
  return f;
}

CutFamily build_fqn_cut(int n, int r) {
  if (n < 3 || n > Dimension::kMax || r < 2 || r > n + 1) {
    throw Error(ErrorCode::kUnsupported,
                "folded construction needs n >= 3 and 2 <= r <= n+1, got " +
                    pair_text(n, r));
  }
  const Dimension dim(n);
  const Labels at(dim);
  const bool full = r == n + 1;
  CutFamily f{Graph(Family::kFQ, dim), {}};
  for (int i = 1; i <= n / 2; ++i) {
    StarEmbedding s = at.paired_star(i, full ? n - 2 : r - 2);
    if (full) s.leaves.push_back(at.ubar({2 * i - 1, 2 * i}));
    f.members.push_back(std::move(s));
  }
  if (n % 2 == 1) {
    // Centre ū^n, adjacent to u^n through the fold edge.
    StarEmbedding last{at.ubar({n}), {at.u({n}), at.ubar({})}};
    for (int j = 1; j <= r - 2; ++j) last.leaves.push_back(at.ubar({n, j}));
    f.members.push_back(std::move(last));
  } else if (!full) {
    StarEmbedding last{at.ubar({}), {}};
    for (int j = 1; j <= r; ++j) last.leaves.push_back(at.ubar({j}));
    f.members.push_back(std::move(last));
  } else {
    StarEmbedding last{at.ubar({1}), {at.ubar({}), at.u({1})}};
    for (int j = 2; j <= n; ++j) last.leaves.push_back(at.ubar({1, j}));
    f.members.push_back(std::move(last));
  }
  return f;
}

IntersectionReport family_intersections(const CutFamily& f) {
  const Dimension dim = f.graph.dim();
  std::vector<VertexSet> sets;
  sets.reserve(f.members.size());
  for (const auto& s : f.members) sets.push_back(s.vertex_set(dim));
  IntersectionReport report;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    for (std::size_t j = i + 1; j < sets.size(); ++j) {
      VertexSet shared = sets[i] & sets[j];
      if (!shared.empty()) report.pairs.push_back({i, j, std::move(shared)});
    }
  }
  return report;
}

}  // namespace starcut
