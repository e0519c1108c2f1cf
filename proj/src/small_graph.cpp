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

#include "small_graph.hpp"

#include "starcut/errors.hpp"

namespace starcut::detail {

SmallGraph::SmallGraph(const Graph& g) : g_(g) {
  if (g.n() > kMaxDimension) {
    throw Error(ErrorCode::kTooLarge,
                "exhaustive search supports n <= 7, got n=" +
                    std::to_string(g.n()));
  }
  nbr_.resize(g.vertex_count());
  for (std::uint32_t v = 0; v < g.vertex_count(); ++v) {
    for (Vertex w : g.neighbor_list(Vertex(v))) nbr_[v].set(w.label());
    all_.set(v);
  }
}

Mask SmallGraph::component_of(Mask alive, std::uint32_t seed) const {
  Mask seen = Mask::bit(seed);
  Mask frontier = seen;
  while (frontier.any()) {
    Mask next;
    frontier.for_each([&](std::uint32_t v) { next |= nbr_[v]; });
    next = andnot(next & alive, seen);
    seen |= next;
    frontier = next;
  }
  return seen;
}

bool SmallGraph::connected(Mask set) const {
  if (set.none()) return false;
  return component_of(set, set.lowest()) == set;
}

Mask SmallGraph::to_mask(const VertexSet& s) const {
  Mask m;
  s.for_each([&](Vertex v) { m.set(v.label()); });
  return m;
}

VertexSet SmallGraph::to_set(Mask m) const {
  VertexSet out(g_.dim());
  m.for_each([&](std::uint32_t v) { out.insert(Vertex(v)); });
  return out;
}

}  // namespace starcut::detail
