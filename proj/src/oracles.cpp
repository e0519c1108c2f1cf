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

#include "starcut/oracles.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <mutex>
#include <thread>

#include "cover.hpp"
#include "json.hpp"
#include "small_graph.hpp"
#include "starcut/errors.hpp"
#include "starcut/io.hpp"

namespace starcut {

using detail::CoverSearch;
using detail::GrowthNode;
using detail::Mask;
using detail::SmallGraph;

CutCheck is_structure_cut(const Graph& g, const CutFamily& f, CutMode mode,
                          int r) {
  if (!(f.graph == g)) return {false, "family belongs to a different graph"};
  for (std::size_t i = 0; i < f.members.size(); ++i) {
    const StarEmbedding& s = f.members[i];
    if (auto bad = validate_star(g, s)) {
      return {false, "star " + std::to_string(i + 1) + ": " +
                         bad->describe(g.dim())};
    }
    const bool size_ok = mode == CutMode::kStructure ? s.leaf_count() == r
                                                     : s.leaf_count() <= r;
    if (!size_ok) {
      return {false, "star " + std::to_string(i + 1) + " has " +
                         std::to_string(s.leaf_count()) + " leaves"};
    }
  }
  const auto parts = components_after_removal(g, f.removal_set());
  if (parts.empty()) return {false, "no vertex survives"};
  if (parts.size() == 1) return {false, "remainder is connected"};
  return {true, ""};
}

CoverCount star_cover_number(const Graph& g, const VertexSet& target,
                             const VertexSet& forbidden, int r, CutMode mode,
                             int max) {
  const SmallGraph sg(g);
  if (r < 1) throw Error(ErrorCode::kROutOfRange, "r must be at least 1");
  if (target.intersects(forbidden)) {
    throw Error(ErrorCode::kMalformedInput, "target meets forbidden set");
  }
  const Mask t = sg.to_mask(target);
  const Mask x = sg.to_mask(forbidden);
  CoverSearch search(sg, r, mode);
  if (search.unreachable(t, x).any()) {
    throw Error(ErrorCode::kInfeasible, "a target vertex lies in no star");
  }
  for (int k = 0; k <= max; ++k) {
    if (search.solve(t, x, k, false)) return {false, k};
  }
  return {true, 0};
}

std::string SolveResult::summary() const {
  switch (status) {
    case SolveStatus::kExact:
      return "Exact(" + std::to_string(value) + ")";
    case SolveStatus::kNoCutExists:
      return "NoCutExists";
    case SolveStatus::kInconclusive:
      return best_upper ? "Inconclusive(" + std::to_string(*best_upper) + ")"
                        : "Inconclusive";
  }
  return "";
}

int workers_from_env() {
  const char* env = std::getenv("STARCUT_WORKERS");
  if (env == nullptr) return 1;
  const int w = std::atoi(env);
  return std::clamp(w, 1, 256);
}

namespace {

void check_translation_symmetry(const SmallGraph& g) {
  const std::uint32_t size = g.size();
  for (std::uint32_t w = 1; w < size; ++w) {
    for (std::uint32_t v = 0; v < size; ++v) {
      g.nbr(v).for_each([&](std::uint32_t u) {
        if (!g.nbr(v ^ w).test(u ^ w)) {
          throw Error(ErrorCode::kInternal,
                      "XOR translation is not an automorphism");
        }
      });
    }
  }
}

std::optional<CutFamily> construction(const Graph& g, int r, CutMode mode) {
  const int rr = mode == CutMode::kSubstructure ? std::min(r, g.degree()) : r;
  std::optional<CutFamily> f;
  try {
    f = g.family() == Family::kQ ? build_qn_cut(g.n(), rr)
                                 : build_fqn_cut(g.n(), rr);
  } catch (const Error&) {
    return std::nullopt;
  }
  if (!is_structure_cut(g, *f, mode, r)) {
    throw Error(ErrorCode::kInternal, "construction failed verification");
  }
  return f;
}

struct RootOutcome {
  bool done = false;
  bool found = false;
  bool aborted = false;
  std::uint64_t components = 0;
  std::uint64_t covers = 0;
  std::vector<StarEmbedding> stars;
};

// One iterative-deepening pass: is there a family of at most m stars?
class Pass {
 public:
  Pass(const SmallGraph& g, int r, CutMode mode, int m,
       const SearchBudget& budget, std::uint64_t components_before,
       std::uint64_t covers_before, CoverSearch::Clock::time_point deadline)
      : g_(g), r_(r), mode_(mode), m_(m), budget_(budget),
        deadline_(deadline), components_(components_before),
        covers_(covers_before) {}

  bool prune(Mask members, Mask excluded) const {
    const int x = excluded.count();
    if (x > m_ * (r_ + 1)) return true;
    return 2 * members.count() > static_cast<int>(g_.size()) - x;
  }

  RootOutcome run_root(const GrowthNode& root) {
    RootOutcome out;
    CoverSearch search(g_, r_, mode_);
    // Most of the tree is pruned before any candidate is visited, so the
    // deadline is polled here as well.
    std::uint64_t ticks = 0;
    auto pr = [&](Mask c, Mask x) {
      if ((++ticks & 4095) == 0 && CoverSearch::Clock::now() > deadline_) {
        expired_ = true;
      }
      if (expired_) {
        out.aborted = true;
        return true;
      }
      return prune(c, x);
    };
    auto visit = [&](Mask c, Mask x) {
      if (andnot(g_.all(), c | x).none()) return true;
      ++out.components;
      if (components_.fetch_add(1) + 1 > budget_.max_components ||
          CoverSearch::Clock::now() > deadline_) {
        expired_ = true;
        out.aborted = true;
        return false;
      }
      const std::uint64_t spent = covers_.load();
      const std::uint64_t room =
          spent >= budget_.max_cover_branches
              ? 0
              : budget_.max_cover_branches - spent;
      const bool ok = search.solve(x, c, m_, true, room, deadline_);
      out.covers += search.nodes();
      covers_.fetch_add(search.nodes());
      if (search.exhausted()) {
        out.aborted = true;
        return false;
      }
      if (ok) {
        out.found = true;
        out.stars = search.realize();
        return false;
      }
      return true;
    };
    detail::grow_closed(g_, root, pr, visit);
    out.done = true;
    return out;
  }

  // Roots in depth-first order; the earliest success or abort decides.
  std::vector<RootOutcome> run(const std::vector<GrowthNode>& roots,
                               int workers) {
    std::vector<RootOutcome> results(roots.size());
    std::atomic<std::size_t> next{0};
    std::atomic<std::size_t> stop_at{roots.size()};
    auto worker = [&] {
      while (true) {
        const std::size_t i = next.fetch_add(1);
        if (i >= roots.size() || i > stop_at.load()) return;
        results[i] = run_root(roots[i]);
        if (results[i].found || results[i].aborted) {
          std::size_t cur = stop_at.load();
          while (i < cur && !stop_at.compare_exchange_weak(cur, i)) {
          }
        }
      }
    };
    std::vector<std::thread> pool;
    for (int w = 1; w < workers; ++w) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    return results;
  }

 private:
  const SmallGraph& g_;
  int r_;
  CutMode mode_;
  int m_;
  const SearchBudget& budget_;
  CoverSearch::Clock::time_point deadline_;
  std::atomic<std::uint64_t> components_;
  std::atomic<std::uint64_t> covers_;
  std::atomic<bool> expired_{false};
};

}  // namespace

SolveResult min_star_cut(const Graph& g, int r, CutMode mode,
                         const SearchBudget& budget, int workers) {
  if (r < 1) throw Error(ErrorCode::kROutOfRange, "r must be at least 1");
  const SmallGraph sg(g);
  check_translation_symmetry(sg);
  workers = std::max(1, workers);

  SolveResult result;
  result.stats.workers = workers;
  if (mode == CutMode::kStructure && r > g.degree()) {
    result.status = SolveStatus::kNoCutExists;
    return result;
  }
  const int rr = mode == CutMode::kSubstructure ? std::min(r, g.degree()) : r;

  const std::optional<CutFamily> upper = construction(g, r, mode);
  const int ub = upper ? static_cast<int>(upper->members.size()) : 0;
  const int last = upper ? ub - 1 : static_cast<int>(g.vertex_count());
  const auto deadline = CoverSearch::Clock::now() + budget.wall_limit;

  for (int m = 1; m <= last; ++m) {
    Pass pass(sg, rr, mode, m, budget, result.stats.components,
              result.stats.covers, deadline);
    auto pr = [&](Mask c, Mask x) { return pass.prune(c, x); };
    const auto roots = detail::split_roots(sg, detail::root_node(sg, 0),
                                           workers > 1 ? 12 : 0, pr);
    const auto outcomes = pass.run(roots, workers);
    for (const RootOutcome& o : outcomes) {
      if (!o.done) break;
      result.stats.components += o.components;
      result.stats.covers += o.covers;
      if (o.aborted) {
        result.status = SolveStatus::kInconclusive;
        if (upper) result.best_upper = ub;
        return result;
      }
      if (o.found) {
        CutFamily f{g, o.stars};
        const CutCheck check = is_structure_cut(g, f, mode, r);
        if (!check) {
          throw Error(ErrorCode::kInternal,
                      "search produced an invalid cut: " + check.reason);
        }
        result.status = SolveStatus::kExact;
        result.value = m;
        result.witness = std::move(f);
        return result;
      }
    }
    result.stats.refuted_below = m + 1;
  }
  if (upper) {
    result.status = SolveStatus::kExact;
    result.value = ub;
    result.witness = upper;
  } else {
    result.status = SolveStatus::kNoCutExists;
  }
  return result;
}

NeighborhoodMinimum min_neighborhood(const Graph& g, int k) {
  if (g.n() > 6) throw Error(ErrorCode::kTooLarge, "needs n <= 6");
  if (k < 1 || k > 6) throw Error(ErrorCode::kSizeOutOfRange, "needs 1 <= k <= 6");
  ConnectedSubgraphEnumerator it(g, static_cast<std::uint32_t>(k), Vertex(0));
  std::optional<NeighborhoodMinimum> best;
  while (auto c = it.next()) {
    const int v = static_cast<int>(g.neighborhood(*c).size());
    if (!best || v < best->value) best = NeighborhoodMinimum{v, *c};
  }
  if (!best) throw Error(ErrorCode::kSizeOutOfRange, "no connected set of that size");
  return *best;
}

ExtraCut brute_kappa_g(const Graph& g, int extra_g) {
  if (g.n() > 5) throw Error(ErrorCode::kTooLarge, "needs n <= 5");
  if (extra_g < 0) throw Error(ErrorCode::kSizeOutOfRange, "g must be >= 0");
  const SmallGraph sg(g);
  const int total = static_cast<int>(sg.size());
  int best = total + 1;
  Mask best_cut;
  auto prune = [&](Mask c, Mask x) {
    return x.count() >= best || 2 * c.count() > total - x.count();
  };
  auto visit = [&](Mask c, Mask x) {
    if (c.count() <= extra_g) return true;
    Mask rest = andnot(sg.all(), c | x);
    Mask cut = x;
    bool big = false;
    while (rest.any()) {
      const Mask part = sg.component_of(rest, rest.lowest());
      rest = andnot(rest, part);
      if (part.count() > extra_g) big = true; else cut |= part;
    }
    if (big && cut.count() < best) {
      best = cut.count();
      best_cut = cut;
    }
    return true;
  };
  // Seed with every anchored connected set of size g+1 and its boundary so
  // the include-first search starts with a tight bound.
  if (extra_g + 1 < total) {
    ConnectedSubgraphEnumerator it(g, static_cast<std::uint32_t>(extra_g + 1), Vertex(0));
    while (auto c = it.next()) {
      Mask m;
      c->for_each([&](Vertex v) { m.set(v.label()); });
      Mask x;
      g.neighborhood(*c).for_each([&](Vertex v) { x.set(v.label()); });
      visit(m, x);
    }
  }
  detail::grow_closed(sg, detail::root_node(sg, 0), prune, visit);
  if (best > total) {
    throw Error(ErrorCode::kInfeasible, "no cut leaves every part above g");
  }
  return ExtraCut{best, sg.to_set(best_cut)};
}

std::string certificate_to_json(const Graph& g, int r, CutMode mode,
                                const SolveResult& result) {
  using Json = nlohmann::ordered_json;
  Json j;
  j["claim"] = {{"family", std::string(family_name(g.family()))},
                {"n", g.n()},
                {"r", r},
                {"mode", std::string(mode_name(mode))}};
  Json value;
  switch (result.status) {
    case SolveStatus::kExact:
      value["kind"] = "exact";
      value["value"] = result.value;
      break;
    case SolveStatus::kNoCutExists:
      value["kind"] = "no_cut";
      break;
    case SolveStatus::kInconclusive:
      value["kind"] = "inconclusive";
      value["best_upper"] =
          result.best_upper ? Json(*result.best_upper) : Json(nullptr);
      break;
  }
  value["refuted_below"] = result.stats.refuted_below;
  j["value"] = std::move(value);
  j["witness"] = result.witness
                     ? Json::parse(witness_to_json(Witness{*result.witness, r}))
                     : Json(nullptr);
  j["search"] = {{"components", result.stats.components},
                 {"covers", result.stats.covers},
                 {"workers", result.stats.workers}};
  return j.dump(2) + "\n";
}

}  // namespace starcut
