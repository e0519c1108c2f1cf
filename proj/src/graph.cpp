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

#include "starcut/graph.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "small_graph.hpp"
#include "starcut/errors.hpp"

namespace starcut {

std::string_view family_name(Family f) {
  return f == Family::kQ ? "Q" : "FQ";
}

Family parse_family(std::string_view text) {
  if (text == "q" || text == "Q") return Family::kQ;
  if (text == "fq" || text == "FQ") return Family::kFQ;
  throw Error(ErrorCode::kMalformedInput,
              "unknown family '" + std::string(text) + "'");
}

void Graph::check_vertex(Vertex v) const {
  if (!contains(v)) {
    throw Error(ErrorCode::kInvalidVertex,
                "label " + std::to_string(v.label()) + " not in " +
                    std::string(family_name(family_)) + "_" +
                    std::to_string(n()));
  }
}

bool Graph::adjacent(Vertex a, Vertex b) const {
  const int d = hamming_distance(a, b);
  return d == 1 || (family_ == Family::kFQ && d == n());
}

std::vector<Vertex> Graph::neighbor_list(Vertex v) const {
  check_vertex(v);
  std::vector<Vertex> out;
  out.reserve(degree());
  for (int i = 0; i < n(); ++i) out.emplace_back(v.label() ^ (1u << i));
  if (family_ == Family::kFQ) out.push_back(complement(v, dim_));
  return out;
}

VertexSet Graph::neighbors(Vertex v) const {
  const auto list = neighbor_list(v);
  return VertexSet(dim_, list);
}

VertexSet Graph::expand(const VertexSet& a) const {
  const auto& k = kernels::active_kernels();
  VertexSet out(dim_);
  auto dst = out.mutable_words();
  const auto src = a.words();
  for (int i = 0; i < n(); ++i) {
    k.flip_or_into(dst.data(), src.data(), dst.size(), static_cast<unsigned>(i));
  }
  if (family_ == Family::kFQ) {
    k.complement_or_into(dst.data(), src.data(), dst.size(),
                         static_cast<unsigned>(n()));
  }
  return out;
}

VertexSet Graph::neighborhood(const VertexSet& a) const {
  return expand(a) - a;
}

std::vector<VertexSet> components_after_removal(const Graph& g,
                                                const VertexSet& removed) {
  VertexSet alive = VertexSet::full(g.dim()) - removed;
  std::vector<VertexSet> out;
  while (auto seed = alive.min()) {
    VertexSet component(g.dim(), {*seed});
    VertexSet frontier = component;
    while (true) {
      VertexSet next = g.expand(frontier);
      next &= alive;
      next -= component;
      if (next.empty()) break;
      component |= next;
      frontier = std::move(next);
    }
    alive -= component;
    out.push_back(std::move(component));
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const VertexSet& a, const VertexSet& b) {
                     const auto sa = a.size();
                     const auto sb = b.size();
                     if (sa != sb) return sa < sb;
                     return a.min()->label() < b.min()->label();
                   });
  return out;
}

std::optional<int> odd_girth(const Graph& g) {
  // Vertex-transitive, so a shortest odd cycle passes through label 0.
  std::vector<int> dist(g.vertex_count(), -1);
  std::deque<std::uint32_t> queue{0};
  dist[0] = 0;
  std::optional<int> best;
  while (!queue.empty()) {
    const std::uint32_t x = queue.front();
    queue.pop_front();
    for (Vertex y : g.neighbor_list(Vertex(x))) {
      if (dist[y.label()] < 0) {
        dist[y.label()] = dist[x] + 1;
        queue.push_back(y.label());
      } else if (dist[y.label()] == dist[x]) {
        const int len = 2 * dist[x] + 1;
        if (!best || len < *best) best = len;
      }
    }
  }
  return best;
}

int min_vertex_cut(const Graph& g) {
  if (g.n() > 6) {
    throw Error(ErrorCode::kTooLarge, "min_vertex_cut is exhaustive for n <= 6");
  }
  const detail::SmallGraph sg(g);
  const int total = static_cast<int>(g.vertex_count());
  // N(0) separates whenever something lies outside its closed neighbourhood.
  int best = total > g.degree() + 1 ? g.degree() : total - 1;
  auto prune = [&](detail::Mask c, detail::Mask x) {
    return x.count() >= best || 2 * c.count() > total - x.count();
  };
  auto visit = [&](detail::Mask c, detail::Mask x) {
    if (andnot(sg.all(), c | x).any()) best = std::min(best, x.count());
    return true;
  };
  detail::grow_closed(sg, detail::root_node(sg, 0), prune, visit);
  return best;
}

ConnectedSubgraphEnumerator::ConnectedSubgraphEnumerator(
    const Graph& g, std::uint32_t size, std::optional<Vertex> anchor)
    : g_(g), size_(size), anchor_(anchor) {
  if (size < 1 || size > g.vertex_count()) {
    throw Error(ErrorCode::kSizeOutOfRange,
                "size " + std::to_string(size) + " not in 1..2^" +
                    std::to_string(g.n()));
  }
  if (anchor) g.check_vertex(*anchor);
  state_.assign(g.vertex_count(), 0);
}

bool ConnectedSubgraphEnumerator::start_root() {
  if (anchor_) {
    if (next_root_ > 0) return false;
    root_ = anchor_->label();
    next_root_ = 1;
  } else {
    if (next_root_ >= g_.vertex_count()) return false;
    root_ = next_root_++;
  }
  state_[root_] = 1;
  members_.assign(1, root_);
  root_active_ = true;
  descend_ = true;
  return true;
}

void ConnectedSubgraphEnumerator::end_root() {
  state_[root_] = 0;
  members_.clear();
  root_active_ = false;
}

std::optional<std::uint32_t> ConnectedSubgraphEnumerator::pick_frontier()
    const {
  std::optional<std::uint32_t> best;
  for (std::uint32_t m : members_) {
    for (Vertex w : g_.neighbor_list(Vertex(m))) {
      const std::uint32_t l = w.label();
      if (state_[l] != 0) continue;
      if (!anchor_ && l < root_) continue;
      if (!best || l < *best) best = l;
    }
  }
  return best;
}

VertexSet ConnectedSubgraphEnumerator::current() const {
  VertexSet out(g_.dim());
  for (std::uint32_t m : members_) out.insert(Vertex(m));
  return out;
}

std::optional<VertexSet> ConnectedSubgraphEnumerator::next() {
  while (!done_) {
    if (!root_active_ && !start_root()) {
      done_ = true;
      break;
    }
    if (descend_) {
      if (members_.size() == size_) {
        descend_ = false;
        return current();
      }
      if (auto v = pick_frontier()) {
        stack_.push_back(Frame{*v, false});
        state_[*v] = 1;
        members_.push_back(*v);
        continue;
      }
      descend_ = false;
    }
    if (stack_.empty()) {
      end_root();
      continue;
    }
    Frame& top = stack_.back();
    if (!top.excluded) {
      members_.pop_back();
      state_[top.vertex] = 2;
      top.excluded = true;
      descend_ = true;
    } else {
      state_[top.vertex] = 0;
      stack_.pop_back();
    }
  }
  return std::nullopt;
}

}  // namespace starcut
