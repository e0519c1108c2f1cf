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

#include "cover.hpp"

#include <algorithm>

#include "starcut/errors.hpp"

namespace starcut::detail {

CoverSearch::CoverSearch(const SmallGraph& g, int r, CutMode mode)
    : g_(g), r_(r), mode_(mode) {}

bool CoverSearch::eligible(std::uint32_t c, Mask forbidden) const {
  if (forbidden.test(c)) return false;
  if (mode_ == CutMode::kSubstructure) return true;
  return andnot(g_.nbr(c), forbidden).count() >= r_;
}

Mask CoverSearch::unreachable(Mask target, Mask forbidden) const {
  Mask out;
  target.for_each([&](std::uint32_t t) {
    bool ok = eligible(t, forbidden);
    g_.nbr(t).for_each([&](std::uint32_t c) { ok = ok || eligible(c, forbidden); });
    if (!ok) out.set(t);
  });
  return out;
}

bool CoverSearch::solve(Mask target, Mask forbidden, int limit,
                        bool need_survivor, std::uint64_t node_budget,
                        Clock::time_point deadline) {
  target_ = target;
  forbidden_ = forbidden;
  limit_ = limit;
  need_survivor_ = need_survivor;
  budget_ = node_budget;
  deadline_ = deadline;
  nodes_ = 0;
  exhausted_ = false;
  stack_.clear();
  eligible_ = Mask{};
  g_.all().for_each([&](std::uint32_t c) {
    if (eligible(c, forbidden)) eligible_.set(c);
  });
  return search(target, 0);
}

bool CoverSearch::survivor_exists() {
  if (!need_survivor_) return true;
  Mask centers;
  for (const CoverStar& s : stack_) centers.set(s.center);
  const Mask free = andnot(g_.all(), forbidden_ | target_ | centers);
  bool found = false;
  free.for_each([&](std::uint32_t w) {
    if (found) return;
    if (mode_ == CutMode::kStructure) {
      for (const CoverStar& s : stack_) {
        Mask room = andnot(g_.nbr(s.center), forbidden_);
        room.reset(w);
        if (room.count() < r_) return;
      }
    }
    survivor_ = w;
    found = true;
  });
  return found;
}

bool CoverSearch::search(Mask uncovered, int used) {
  if (++nodes_ > budget_ ||
      ((nodes_ & 1023) == 0 && Clock::now() > deadline_)) {
    exhausted_ = true;
    return false;
  }
  if (uncovered.none()) return survivor_exists();
  const int left = limit_ - used;
  if (left <= 0) return false;
  if ((uncovered.count() + r_) / (r_ + 1) > left) return false;

  // Branch on the uncovered vertex with the fewest admissible centres.
  std::uint32_t t = 0;
  int best = INT32_MAX;
  uncovered.for_each([&](std::uint32_t v) {
    int options = eligible_.test(v) ? 1 : 0;
    g_.nbr(v).for_each([&](std::uint32_t c) { options += eligible_.test(c) ? 1 : 0; });
    if (options < best) {
      best = options;
      t = v;
    }
  });
  if (best == 0) return false;

  std::vector<std::uint32_t> centers;
  if (eligible_.test(t)) centers.push_back(t);
  g_.nbr(t).for_each([&](std::uint32_t c) {
    if (eligible_.test(c)) centers.push_back(c);
  });
  std::sort(centers.begin(), centers.end());

  for (std::uint32_t c : centers) {
    Mask fixed;
    if (uncovered.test(c)) fixed.set(c);
    Mask avail = g_.nbr(c) & uncovered;
    int take = r_;
    if (c != t) {
      avail.reset(t);
      fixed.set(t);
      take = r_ - 1;
    }
    std::vector<std::uint32_t> pool;
    avail.for_each([&](std::uint32_t v) { pool.push_back(v); });
    take = std::min<int>(take, static_cast<int>(pool.size()));
    if (try_star(uncovered, used, c, pool, take, fixed)) return true;
    if (exhausted_) return false;
  }
  return false;
}

bool CoverSearch::try_star(Mask uncovered, int used, std::uint32_t center,
                           const std::vector<std::uint32_t>& pool, int take,
                           Mask fixed) {
  // Lexicographic combinations of `take` leaves from the pool.
  std::vector<int> pick(static_cast<std::size_t>(take));
  for (int i = 0; i < take; ++i) pick[static_cast<std::size_t>(i)] = i;
  const int m = static_cast<int>(pool.size());
  while (true) {
    Mask leaves = fixed;
    leaves.reset(center);
    Mask covered = fixed;
    for (int i : pick) {
      leaves.set(pool[static_cast<std::size_t>(i)]);
      covered.set(pool[static_cast<std::size_t>(i)]);
    }
    stack_.push_back(CoverStar{center, leaves});
    if (search(andnot(uncovered, covered), used + 1)) return true;
    stack_.pop_back();
    if (exhausted_) return false;

    int i = take - 1;
    while (i >= 0 && pick[static_cast<std::size_t>(i)] == m - take + i) --i;
    if (i < 0) return false;
    ++pick[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < take; ++j) {
      pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
    }
  }
}

std::vector<StarEmbedding> CoverSearch::realize() const {
  std::vector<StarEmbedding> out;
  for (const CoverStar& s : stack_) {
    StarEmbedding star{Vertex(s.center), {}};
    s.leaves.for_each([&](std::uint32_t v) { star.leaves.push_back(Vertex(v)); });
    if (mode_ == CutMode::kStructure) {
      Mask room = andnot(g_.nbr(s.center), forbidden_ | s.leaves);
      if (need_survivor_) room.reset(survivor_);
      room.for_each([&](std::uint32_t v) {
        if (star.leaf_count() < r_) star.leaves.push_back(Vertex(v));
      });
      if (star.leaf_count() != r_) {
        throw Error(ErrorCode::kInternal, "cannot pad star to r leaves");
      }
      std::sort(star.leaves.begin(), star.leaves.end());
    }
    out.push_back(std::move(star));
  }
  return out;
}

}  // namespace starcut::detail
