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

// Exhaustive checkers for the counting facts the lower-bound proofs use.

#include <algorithm>

#include "small_graph.hpp"
#include "starcut/errors.hpp"
#include "starcut/oracles.hpp"

namespace starcut {

using detail::Mask;
using detail::SmallGraph;

void LemmaReport::normalize() {
  std::sort(violations.begin(), violations.end());
  std::sort(extremal_witnesses.begin(), extremal_witnesses.end());
  if (extremal_witnesses.size() > kMaxStoredWitnesses) {
    extremal_witnesses.resize(kMaxStoredWitnesses);
  }
}

void LemmaReport::merge(const LemmaReport& other) {
  if (lemma_id.empty()) lemma_id = other.lemma_id;
  instances_checked += other.instances_checked;
  extremal_count += other.extremal_count;
  violations.insert(violations.end(), other.violations.begin(),
                    other.violations.end());
  extremal_witnesses.insert(extremal_witnesses.end(),
                            other.extremal_witnesses.begin(),
                            other.extremal_witnesses.end());
  normalize();
}

LemmaReport check_common_neighbors(const Graph& g) {
  if (g.n() > 8) throw Error(ErrorCode::kTooLarge, "needs n <= 8");
  LemmaReport report;
  report.lemma_id = "common-neighbors";
  const std::uint32_t size = g.vertex_count();
  std::vector<std::vector<Vertex>> nbrs(size);
  for (std::uint32_t v = 0; v < size; ++v) {
    nbrs[v] = g.neighbor_list(Vertex(v));
    std::sort(nbrs[v].begin(), nbrs[v].end());
  }
  for (std::uint32_t a = 0; a < size; ++a) {
    for (std::uint32_t b = a + 1; b < size; ++b) {
      ++report.instances_checked;
      std::vector<Vertex> common;
      std::set_intersection(nbrs[a].begin(), nbrs[a].end(), nbrs[b].begin(),
                            nbrs[b].end(), std::back_inserter(common));
      if (common.size() != 0 && common.size() != 2) {
        report.violations.push_back(
            Finding{{Vertex(a), Vertex(b)},
                    common,
                    std::to_string(common.size()) + " common neighbours"});
      }
    }
  }
  report.normalize();
  return report;
}

LemmaReport check_star_bounds(const Graph& g, int r, int kmax) {
  if (g.n() > 5) throw Error(ErrorCode::kTooLarge, "needs n <= 5");
  if (kmax < 1 || kmax > 5) throw Error(ErrorCode::kTooLarge, "needs 1 <= kmax <= 5");
  if (r < 2 || r > g.degree()) {
    throw Error(ErrorCode::kROutOfRange, "needs 2 <= r <= degree");
  }
  const SmallGraph sg(g);
  LemmaReport report;
  report.lemma_id = "star-bounds";

  // Stars centred at 0 suffice: translations act transitively.
  const std::vector<Vertex> around = g.neighbor_list(Vertex(0));
  const int deg = static_cast<int>(around.size());
  std::vector<Mask> stars;
  for (std::uint32_t pick = 0; pick < (1u << deg); ++pick) {
    if (__builtin_popcount(pick) != r) continue;
    Mask s = Mask::bit(0);
    for (int i = 0; i < deg; ++i) {
      if ((pick >> i) & 1u) s.set(around[static_cast<std::size_t>(i)].label());
    }
    stars.push_back(s);
  }

  auto listing = [](Mask m) {
    std::vector<Vertex> out;
    m.for_each([&](std::uint32_t v) { out.push_back(Vertex(v)); });
    return out;
  };

  for (int k = 1; k <= kmax; ++k) {
    ConnectedSubgraphEnumerator it(g, static_cast<std::uint32_t>(k));
    while (auto set = it.next()) {
      const Mask c = sg.to_mask(*set);
      const Mask nc = sg.neighborhood(c);
      bool is_star = false;
      c.for_each([&](std::uint32_t v) {
        if (andnot(c, sg.nbr(v) | Mask::bit(v)).none()) is_star = true;
      });
      for (const Mask& s : stars) {
        if ((c & s).any()) continue;
        ++report.instances_checked;
        const int hits = (nc & s).count();
        const int bound = k == 1 ? 2 : 2 * (k - 1);
        if (hits < bound) continue;
        std::string note = "k=" + std::to_string(k) + " hits=" + std::to_string(hits);
        Finding f{listing(c), listing(s), note};
        bool bad = hits > bound;
        if (!bad && k == 1) {
          // Equality must come from two leaves, not the centre.
          bad = sg.nbr(c.lowest()).test(0);
          if (bad) f.note += " through the centre";
        }
        if (!bad && k >= 2 && !is_star) {
          bad = true;
          f.note += " attained by a non-star";
        }
        if (bad) {
          report.violations.push_back(std::move(f));
        } else {
          ++report.extremal_count;
          report.extremal_witnesses.push_back(std::move(f));
          if (report.extremal_witnesses.size() > 4096) report.normalize();
        }
      }
    }
  }
  report.normalize();
  return report;
}

}  // namespace starcut
