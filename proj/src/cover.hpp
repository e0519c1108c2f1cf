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

#ifndef STARCUT_SRC_COVER_HPP_
#define STARCUT_SRC_COVER_HPP_

// Covering a target set by a bounded number of stars that avoid a forbidden
// set. Exact: every admissible star through the chosen target vertex is
// branched on, with the lone dominance that a star takes as many uncovered
// target leaves as it is allowed.

#include <chrono>
#include <cstdint>
#include <vector>

#include "small_graph.hpp"
#include "starcut/stars.hpp"

namespace starcut::detail {

struct CoverStar {
  std::uint32_t center;
  Mask leaves;  // target leaves chosen by the search, padding excluded
};

class CoverSearch {
 public:
  using Clock = std::chrono::steady_clock;

  CoverSearch(const SmallGraph& g, int r, CutMode mode);

  // Whether at most `limit` stars avoiding `forbidden` cover `target`. With
  // need_survivor, some vertex outside forbidden, target and the stars must
  // remain. Gives up (returning false, exhausted() true) after node_budget
  // nodes or at the deadline.
  bool solve(Mask target, Mask forbidden, int limit, bool need_survivor,
             std::uint64_t node_budget = UINT64_MAX,
             Clock::time_point deadline = Clock::time_point::max());

  // Target vertices that no admissible star can reach.
  Mask unreachable(Mask target, Mask forbidden) const;

  bool exhausted() const { return exhausted_; }
  std::uint64_t nodes() const { return nodes_; }

  // Stars of the last successful solve, padded to r leaves in structure mode.
  std::vector<StarEmbedding> realize() const;

 private:
  bool eligible(std::uint32_t c, Mask forbidden) const;
  bool search(Mask uncovered, int used);
  bool try_star(Mask uncovered, int used, std::uint32_t center,
                const std::vector<std::uint32_t>& pool, int take, Mask fixed);
  bool survivor_exists();

  const SmallGraph& g_;
  int r_;
  CutMode mode_;

  Mask forbidden_;
  Mask target_;
  Mask eligible_;
  int limit_ = 0;
  bool need_survivor_ = false;
  std::uint64_t budget_ = 0;
  Clock::time_point deadline_;

  std::uint64_t nodes_ = 0;
  bool exhausted_ = false;
  std::vector<CoverStar> stack_;
  std::uint32_t survivor_ = 0;
};

}  // namespace starcut::detail

#endif  // STARCUT_SRC_COVER_HPP_
