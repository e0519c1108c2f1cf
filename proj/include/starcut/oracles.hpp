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

#ifndef STARCUT_ORACLES_HPP_
#define STARCUT_ORACLES_HPP_

// Ground truth at desk scale: cut verification, the exact minimum star-cut
// search, the covering subproblem, and exhaustive checkers for the counting
// lemmas the lower-bound arguments rely on.
//
// All searches anchor candidate components at label 0. That is sound because
// v -> v XOR w is an automorphism of Q_n and FQ_n; the solver re-checks this
// on every edge of the target graph before trusting it.

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "starcut/graph.hpp"
#include "starcut/stars.hpp"
#include "starcut/vertex_set.hpp"

namespace starcut {

struct CutCheck {
  bool ok = false;
  std::string reason;  // empty when ok

  explicit operator bool() const { return ok; }
};

// True iff every member is a star of g with exactly r (structure) or at most
// r (substructure) leaves and g minus the union has at least two components.
CutCheck is_structure_cut(const Graph& g, const CutFamily& f, CutMode mode,
                          int r);

struct CoverCount {
  bool exceeded = false;  // MoreThan(max)
  int count = 0;          // meaningful when !exceeded
};

// Fewest stars of g avoiding `forbidden` whose vertex union covers `target`.
// Substructure members have at most r leaves; structure members have exactly
// r, padded with any non-forbidden neighbours. Needs n <= 7 (kTooLarge).
// Throws kInfeasible when some target vertex lies in no admissible star, and
// kMalformedInput when target and forbidden intersect.
CoverCount star_cover_number(const Graph& g, const VertexSet& target,
                             const VertexSet& forbidden, int r, CutMode mode,
                             int max);

struct SearchBudget {
  // Candidate components handed to the covering step, summed over passes.
  std::uint64_t max_components = 1'000'000;
  // Nodes of the covering search, summed over passes.
  std::uint64_t max_cover_branches = 2'000'000'000;
  std::chrono::milliseconds wall_limit{60'000};
};

struct SearchStats {
  std::uint64_t components = 0;
  std::uint64_t covers = 0;
  int workers = 1;
  // Every family with fewer members than this was refuted exhaustively.
  int refuted_below = 1;
};

enum class SolveStatus { kExact, kNoCutExists, kInconclusive };

struct SolveResult {
  SolveStatus status = SolveStatus::kInconclusive;
  int value = 0;                    // kExact only
  std::optional<int> best_upper;    // kInconclusive: best verified upper bound
  std::optional<CutFamily> witness; // kExact: verified cut with `value` members
  SearchStats stats;

  std::string summary() const;  // "Exact(3)", "NoCutExists", "Inconclusive(4)"
};

// STARCUT_WORKERS, default 1.
int workers_from_env();

// Exact kappa(g, K_{1,r}) or kappa^s(g, K_{1,r}) for n <= 7 (kTooLarge
// beyond). Upper bound from the explicit constructions where they apply,
// lower bound by refuting every smaller family over all anchored candidate
// components. Results do not depend on the worker count unless the budget
// runs out.
SolveResult min_star_cut(const Graph& g, int r, CutMode mode,
                         const SearchBudget& budget = {}, int workers = 1);

struct NeighborhoodMinimum {
  int value;
  VertexSet minimizer;  // first minimizing set in enumeration order
};

// min |N(C)| over connected C with |C| = k. Needs n <= 6 and 1 <= k <= 6.
NeighborhoodMinimum min_neighborhood(const Graph& g, int k);

struct ExtraCut {
  int value;
  VertexSet cut;
};

// g-extra connectivity by anchored search, n <= 5. Throws kInfeasible if no
// cut leaves every component with more than extra_g vertices.
ExtraCut brute_kappa_g(const Graph& g, int extra_g);

struct Finding {
  std::vector<Vertex> subject;  // the pair / component under test
  std::vector<Vertex> related;  // common neighbours / star vertices
  std::string note;

  friend bool operator==(const Finding&, const Finding&) = default;
  friend bool operator<(const Finding& a, const Finding& b) {
    if (a.subject != b.subject) return a.subject < b.subject;
    if (a.related != b.related) return a.related < b.related;
    return a.note < b.note;
  }
};

struct LemmaReport {
  static constexpr std::size_t kMaxStoredWitnesses = 32;

  std::string lemma_id;
  std::uint64_t instances_checked = 0;
  std::vector<Finding> violations;
  std::uint64_t extremal_count = 0;
  std::vector<Finding> extremal_witnesses;  // smallest kMaxStoredWitnesses

  bool passed() const { return violations.empty(); }

  // Order-independent accumulation.
  void merge(const LemmaReport& other);
  void normalize();
};

// Every pair of vertices has 0 or 2 common neighbours. n <= 8.
LemmaReport check_common_neighbors(const Graph& g);

// For every K_{1,r} of g and connected C disjoint from it with |C| = k <=
// kmax: |N(C) cap V(K)| <= 2 when k = 1 with equality only through two
// leaves, and <= 2(k-1) when k >= 2 with equality only when C is a star.
// Needs n <= 5, kmax <= 5 and 2 <= r <= degree.
LemmaReport check_star_bounds(const Graph& g, int r, int kmax);

// Certificate JSON: {"claim":..,"value":..,"witness":..,"search":{..}}.
std::string certificate_to_json(const Graph& g, int r, CutMode mode,
                                const SolveResult& result);

}  // namespace starcut

#endif  // STARCUT_ORACLES_HPP_
