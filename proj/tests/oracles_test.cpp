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

#include <gtest/gtest.h>

#include <algorithm>
#include <functional>
#include <optional>
#include <random>
#include <vector>

#include "json.hpp"
#include "starcut/bounds.hpp"
#include "starcut/errors.hpp"
#include "starcut/oracles.hpp"

namespace starcut {
namespace {

// --- Independent brute-force machinery on 64-bit vertex masks (n <= 6). ---

using Bits = std::uint64_t;

struct Brute {
  explicit Brute(const Graph& g) : g(g), size(g.vertex_count()) {
    for (std::uint32_t v = 0; v < size; ++v) {
      Bits m = 0;
      for (std::uint32_t u = 0; u < size; ++u) {
        const int d = __builtin_popcount(u ^ v);
        if (d == 1 || (g.family() == Family::kFQ && d == g.n())) m |= Bits{1} << u;
      }
      nbr.push_back(m);
    }
  }

  Bits all() const { return size == 64 ? ~Bits{0} : (Bits{1} << size) - 1; }

  std::vector<Bits> components(Bits alive) const {
    std::vector<Bits> out;
    while (alive != 0) {
      Bits comp = alive & (~alive + 1), frontier = comp;
      while (frontier != 0) {
        Bits next = 0;
        for (Bits f = frontier; f != 0; f &= f - 1) next |= nbr[__builtin_ctzll(f)];
        next &= alive & ~comp;
        comp |= next;
        frontier = next;
      }
      out.push_back(comp);
      alive &= ~comp;
    }
    return out;
  }

  // Every star avoiding `forbidden`: exactly r leaves (structure) or at most
  // r leaves (substructure).
  std::vector<Bits> stars(int r, CutMode mode, Bits forbidden = 0) const {
    std::vector<Bits> out;
    for (std::uint32_t c = 0; c < size; ++c) {
      if ((forbidden >> c) & 1u) continue;
      std::vector<std::uint32_t> around;
      for (Bits b = nbr[c] & ~forbidden; b != 0; b &= b - 1) {
        around.push_back(static_cast<std::uint32_t>(__builtin_ctzll(b)));
      }
      for (std::uint32_t pick = 0; pick < (1u << around.size()); ++pick) {
        const int k = __builtin_popcount(pick);
        if (mode == CutMode::kStructure ? k != r : k > r) continue;
        Bits s = Bits{1} << c;
        for (std::size_t i = 0; i < around.size(); ++i) {
          if ((pick >> i) & 1u) s |= Bits{1} << around[i];
        }
        out.push_back(s);
      }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  // Smallest k <= max such that some k stars satisfy `good` on their union.
  std::optional<int> smallest_family(const std::vector<Bits>& stars, int max,
                                     const std::function<bool(Bits)>& good) const {
    for (int k = 0; k <= max; ++k) {
      std::function<bool(std::size_t, int, Bits)> rec = [&](std::size_t from, int left,
                                                            Bits acc) {
        if (left == 0) return good(acc);
        for (std::size_t i = from; i < stars.size(); ++i) {
          if (rec(i, left - 1, acc | stars[i])) return true;
        }
        return false;
      };
      if (rec(0, k, 0)) return k;
    }
    return std::nullopt;
  }

  Bits to_bits(const VertexSet& s) const {
    Bits b = 0;
    s.for_each([&](Vertex v) { b |= Bits{1} << v.label(); });
    return b;
  }

  const Graph& g;
  std::uint32_t size;
  std::vector<Bits> nbr;
};

VertexSet set_of(const Graph& g, Bits b) {
  VertexSet s(g.dim());
  for (; b != 0; b &= b - 1) s.insert(Vertex(static_cast<std::uint32_t>(__builtin_ctzll(b))));
  return s;
}

Vertex bits(const char* s, int n) { return parse_vertex(s, Dimension(n)); }

// --- is_structure_cut ---

TEST(IsStructureCutTest, Examples) {
  const Graph q3(Family::kQ, 3);
  const CutFamily built = build_qn_cut(3, 2);
  EXPECT_TRUE(is_structure_cut(q3, built, CutMode::kStructure, 2));
  EXPECT_TRUE(is_structure_cut(q3, built, CutMode::kSubstructure, 2));

  CutFamily single{q3, {built.members[0]}};
  const CutCheck one = is_structure_cut(q3, single, CutMode::kStructure, 2);
  EXPECT_FALSE(one);
  EXPECT_EQ(one.reason, "remainder is connected");

  const Graph q2(Family::kQ, 2);
  CutFamily everything{q2, {{Vertex(0), {Vertex(1), Vertex(2)}},
                            {Vertex(3), {Vertex(1), Vertex(2)}}}};
  const CutCheck all = is_structure_cut(q2, everything, CutMode::kStructure, 2);
  EXPECT_FALSE(all);
  EXPECT_EQ(all.reason, "no vertex survives");
}

TEST(IsStructureCutTest, RejectsMalformedMembers) {
  const Graph q3(Family::kQ, 3);
  CutFamily f = build_qn_cut(3, 2);
  EXPECT_FALSE(is_structure_cut(q3, f, CutMode::kStructure, 3));
  EXPECT_TRUE(is_structure_cut(q3, f, CutMode::kSubstructure, 3));
  EXPECT_FALSE(is_structure_cut(Graph(Family::kFQ, 3), f, CutMode::kStructure, 2));
  f.members[0].leaves[0] = bits("011", 3);
  const CutCheck bad = is_structure_cut(q3, f, CutMode::kStructure, 2);
  EXPECT_FALSE(bad);
  EXPECT_NE(bad.reason.find("star 1"), std::string::npos);
}

// --- star_cover_number ---

std::optional<int> oracle_cover(const Graph& g, Bits target, Bits forbidden, int r,
                                CutMode mode, int max) {
  const Brute b(g);
  return b.smallest_family(b.stars(r, mode, forbidden), max,
                           [&](Bits u) { return (u & target) == target; });
}

TEST(StarCoverTest, Examples) {
  const Graph q3(Family::kQ, 3);
  const Dimension n(3);
  const VertexSet origin(n, {Vertex(0)});
  const VertexSet around(n, {bits("100", 3), bits("010", 3), bits("001", 3)});
  EXPECT_EQ(star_cover_number(q3, around, origin, 2, CutMode::kSubstructure, 5).count, 2);
  EXPECT_EQ(oracle_cover(q3, 0b10110, 1, 2, CutMode::kSubstructure, 5), 2);
  EXPECT_EQ(star_cover_number(q3, VertexSet(n), origin, 2, CutMode::kStructure, 5).count, 0);
  const VertexSet one(n, {bits("100", 3)});
  EXPECT_EQ(star_cover_number(q3, one, origin, 2, CutMode::kSubstructure, 5).count, 1);

  const Graph q4(Family::kQ, 4);
  const CoverCount more = star_cover_number(q4, q4.neighbors(Vertex(0)),
                                            VertexSet(q4.dim(), {Vertex(0)}), 1,
                                            CutMode::kSubstructure, 3);
  EXPECT_TRUE(more.exceeded);
}

TEST(StarCoverTest, Errors) {
  const Graph q3(Family::kQ, 3);
  const Dimension n(3);
  const VertexSet a(n, {bits("100", 3)});
  try {
    star_cover_number(q3, a, a, 2, CutMode::kSubstructure, 5);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kMalformedInput);
  }
  // Every neighbour of 100 is forbidden, and 100 itself has no room for leaves.
  const VertexSet walls(n, {bits("000", 3), bits("110", 3), bits("101", 3)});
  try {
    star_cover_number(q3, a, walls, 2, CutMode::kStructure, 5);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInfeasible);
  }
  EXPECT_EQ(star_cover_number(q3, a, walls, 2, CutMode::kSubstructure, 5).count, 1);
  EXPECT_THROW(star_cover_number(Graph(Family::kQ, 8), VertexSet(Dimension(8)),
                                 VertexSet(Dimension(8)), 2, CutMode::kStructure, 3),
               Error);
}

TEST(StarCoverTest, AgreesWithExhaustiveFamiliesOnRandomInstances) {
  std::mt19937 rng(99);
  for (Family f : {Family::kQ, Family::kFQ}) {
    for (int n : {3, 4}) {
      const Graph g(f, n);
      const Brute brute(g);
      for (int trial = 0; trial < 25; ++trial) {
        Bits target = 0, forbidden = 0;
        for (std::uint32_t v = 0; v < g.vertex_count(); ++v) {
          const unsigned roll = rng() % 6;
          if (roll == 0) target |= Bits{1} << v;
          if (roll == 1) forbidden |= Bits{1} << v;
        }
        const int r = 1 + static_cast<int>(rng() % static_cast<unsigned>(g.degree()));
        for (CutMode mode : {CutMode::kStructure, CutMode::kSubstructure}) {
          const auto stars = brute.stars(r, mode, forbidden);
          Bits reachable = 0;
          for (Bits s : stars) reachable |= s;
          const auto call = [&] {
            return star_cover_number(g, set_of(g, target), set_of(g, forbidden), r, mode, 4);
          };
          if ((target & ~reachable) != 0) {
            EXPECT_THROW(call(), Error);
            continue;
          }
          const std::optional<int> want = oracle_cover(g, target, forbidden, r, mode, 4);
          const CoverCount got = call();
          if (want) {
            EXPECT_FALSE(got.exceeded);
            EXPECT_EQ(got.count, *want);
          } else {
            EXPECT_TRUE(got.exceeded);
          }
        }
      }
    }
  }
}

// --- min_star_cut ---

void expect_sound(const Graph& g, int r, CutMode mode, const SolveResult& res) {
  if (res.status != SolveStatus::kExact) return;
  ASSERT_TRUE(res.witness.has_value());
  EXPECT_EQ(static_cast<int>(res.witness->members.size()), res.value);
  EXPECT_TRUE(is_structure_cut(g, *res.witness, mode, r));
  EXPECT_EQ(res.stats.refuted_below, res.value);
}

TEST(MinStarCutTest, Examples) {
  const Graph q3(Family::kQ, 3);
  SolveResult res = min_star_cut(q3, 2, CutMode::kSubstructure);
  EXPECT_EQ(res.summary(), "Exact(2)");
  expect_sound(q3, 2, CutMode::kSubstructure, res);

  const Graph q2(Family::kQ, 2);
  EXPECT_EQ(min_star_cut(q2, 2, CutMode::kStructure).status, SolveStatus::kNoCutExists);
  res = min_star_cut(q2, 2, CutMode::kSubstructure);
  EXPECT_EQ(res.summary(), "Exact(2)");
  expect_sound(q2, 2, CutMode::kSubstructure, res);
  // Two antipodal singletons.
  ASSERT_TRUE(res.witness);
  for (const StarEmbedding& s : res.witness->members) EXPECT_TRUE(s.leaves.empty());
  EXPECT_EQ(hamming_distance(res.witness->members[0].center, res.witness->members[1].center), 2);

  const Graph fq3(Family::kFQ, 3);
  res = min_star_cut(fq3, 2, CutMode::kStructure);
  EXPECT_EQ(res.summary(), "Exact(2)");
  expect_sound(fq3, 2, CutMode::kStructure, res);
}

TEST(MinStarCutTest, SettledValuesUpToFive) {
  for (int n = 3; n <= 5; ++n) {
    for (int r = 1; r <= n; ++r) {
      for (CutMode mode : {CutMode::kStructure, CutMode::kSubstructure}) {
        const KnownValue k = known_value(Family::kQ, n, r, mode);
        if (k.kind != KnownKind::kExact) continue;
        const Graph g(Family::kQ, n);
        const SolveResult res = min_star_cut(g, r, mode);
        EXPECT_EQ(res.status, SolveStatus::kExact);
        EXPECT_EQ(res.value, k.value) << n << "," << r << "," << mode_name(mode);
        expect_sound(g, r, mode, res);
      }
    }
  }
}

TEST(MinStarCutTest, AgreesWithAllFamiliesOfAtMostThreeStars) {
  for (Family f : {Family::kQ, Family::kFQ}) {
    const Graph g(f, 3);
    const Brute brute(g);
    for (CutMode mode : {CutMode::kStructure, CutMode::kSubstructure}) {
      const auto disconnects = [&](Bits removed) {
        return brute.components(brute.all() & ~removed).size() >= 2;
      };
      const std::optional<int> want =
          brute.smallest_family(brute.stars(2, mode), 3, disconnects);
      const SolveResult res = min_star_cut(g, 2, mode);
      ASSERT_TRUE(want.has_value());
      EXPECT_EQ(res.status, SolveStatus::kExact);
      EXPECT_EQ(res.value, *want) << family_name(f) << " " << mode_name(mode);
    }
  }
}

TEST(MinStarCutTest, OpenRegionCellsAreDefinitiveAndBelowConstruction) {
  for (int n : {3, 4}) {
    const Graph g(Family::kFQ, n);
    for (int r : {2, 3}) {
      for (CutMode mode : {CutMode::kStructure, CutMode::kSubstructure}) {
        const SolveResult res = min_star_cut(g, r, mode);
        ASSERT_EQ(res.status, SolveStatus::kExact);
        EXPECT_LE(res.value, conjectured_value(Family::kFQ, n));
        expect_sound(g, r, mode, res);
      }
    }
  }
}

TEST(MinStarCutTest, SubstructureNeverExceedsStructure) {
  for (Family f : {Family::kQ, Family::kFQ}) {
    for (int n = 2; n <= 4; ++n) {
      const Graph g(f, n);
      for (int r = 1; r <= g.degree(); ++r) {
        const SolveResult s = min_star_cut(g, r, CutMode::kStructure);
        const SolveResult sub = min_star_cut(g, r, CutMode::kSubstructure);
        if (s.status == SolveStatus::kExact && sub.status == SolveStatus::kExact) {
          EXPECT_LE(sub.value, s.value) << family_name(f) << n << " r=" << r;
        }
        expect_sound(g, r, CutMode::kStructure, s);
        expect_sound(g, r, CutMode::kSubstructure, sub);
      }
    }
  }
}

TEST(MinStarCutTest, NoStarsLargerThanTheDegree) {
  const Graph q3(Family::kQ, 3);
  EXPECT_EQ(min_star_cut(q3, 4, CutMode::kStructure).status, SolveStatus::kNoCutExists);
  // Substructure members simply use every available leaf.
  EXPECT_EQ(min_star_cut(q3, 4, CutMode::kSubstructure).summary(), "Exact(2)");
}

TEST(MinStarCutTest, WorkerCountDoesNotChangeResults) {
  for (auto [f, n, r] : {std::tuple{Family::kQ, 5, 5}, {Family::kQ, 5, 4},
                         {Family::kFQ, 4, 3}, {Family::kFQ, 4, 5}}) {
    const Graph g(f, n);
    for (CutMode mode : {CutMode::kStructure, CutMode::kSubstructure}) {
      const SolveResult one = min_star_cut(g, r, mode, {}, 1);
      const SolveResult three = min_star_cut(g, r, mode, {}, 3);
      EXPECT_EQ(one.summary(), three.summary());
      EXPECT_EQ(one.witness, three.witness);
      EXPECT_EQ(one.stats.components, three.stats.components);
      EXPECT_EQ(one.stats.covers, three.stats.covers);
      EXPECT_EQ(three.stats.workers, 3);
    }
  }
}

TEST(MinStarCutTest, BudgetExhaustionIsInconclusiveWithUpperBound) {
  SearchBudget tiny;
  tiny.max_components = 10;
  const SolveResult res = min_star_cut(Graph(Family::kQ, 5), 5, CutMode::kStructure, tiny);
  EXPECT_EQ(res.status, SolveStatus::kInconclusive);
  EXPECT_EQ(res.best_upper, 3);
  EXPECT_FALSE(res.witness.has_value());

  SearchBudget instant;
  instant.wall_limit = std::chrono::milliseconds(0);
  const SolveResult late = min_star_cut(Graph(Family::kQ, 7), 7, CutMode::kStructure, instant);
  EXPECT_EQ(late.summary(), "Inconclusive(4)");
}

TEST(MinStarCutTest, Preconditions) {
  EXPECT_THROW(min_star_cut(Graph(Family::kQ, 3), 0, CutMode::kStructure), Error);
  try {
    min_star_cut(Graph(Family::kQ, 8), 2, CutMode::kStructure);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kTooLarge);
  }
}

TEST(CertificateTest, Shape) {
  const Graph g(Family::kQ, 4);
  const SolveResult res = min_star_cut(g, 3, CutMode::kSubstructure);
  const auto j = nlohmann::json::parse(certificate_to_json(g, 3, CutMode::kSubstructure, res));
  EXPECT_EQ(j["claim"]["family"], "Q");
  EXPECT_EQ(j["claim"]["n"], 4);
  EXPECT_EQ(j["claim"]["mode"], "substructure");
  EXPECT_EQ(j["value"]["kind"], "exact");
  EXPECT_EQ(j["value"]["value"], 2);
  EXPECT_EQ(j["witness"]["stars"].size(), 2u);
  EXPECT_EQ(j["search"]["components"], res.stats.components);
  EXPECT_EQ(j["search"]["workers"], 1);

  const SolveResult none = min_star_cut(Graph(Family::kQ, 2), 2, CutMode::kStructure);
  const auto k = nlohmann::json::parse(
      certificate_to_json(Graph(Family::kQ, 2), 2, CutMode::kStructure, none));
  EXPECT_EQ(k["value"]["kind"], "no_cut");
  EXPECT_TRUE(k["witness"].is_null());
}

// --- min_neighborhood ---

TEST(MinNeighborhoodTest, Examples) {
  EXPECT_EQ(min_neighborhood(Graph(Family::kQ, 4), 2).value, 6);
  EXPECT_EQ(min_neighborhood(Graph(Family::kQ, 4), 1).value, 4);
  EXPECT_EQ(min_neighborhood(Graph(Family::kQ, 5), 4).value, 11);
  EXPECT_THROW(min_neighborhood(Graph(Family::kQ, 7), 2), Error);
  EXPECT_THROW(min_neighborhood(Graph(Family::kQ, 4), 0), Error);
  EXPECT_THROW(min_neighborhood(Graph(Family::kQ, 4), 7), Error);
}

TEST(MinNeighborhoodTest, AgreesWithUnanchoredEnumeration) {
  for (Family f : {Family::kQ, Family::kFQ}) {
    for (int n : {3, 4}) {
      const Graph g(f, n);
      for (int k = 1; k <= 5; ++k) {
        int best = INT32_MAX;
        ConnectedSubgraphEnumerator it(g, static_cast<std::uint32_t>(k));
        while (auto c = it.next()) best = std::min(best, static_cast<int>(g.neighborhood(*c).size()));
        const NeighborhoodMinimum m = min_neighborhood(g, k);
        EXPECT_EQ(m.value, best) << family_name(f) << n << " k=" << k;
        EXPECT_EQ(static_cast<int>(m.minimizer.size()), k);
        EXPECT_EQ(static_cast<int>(g.neighborhood(m.minimizer).size()), m.value);
      }
    }
  }
}

TEST(MinNeighborhoodTest, FormulaIsTightAndAttainedByStars) {
  auto star_neighborhood = [](const Graph& g, int leaves) {
    VertexSet c(g.dim(), {Vertex(0)});
    const auto around = g.neighbor_list(Vertex(0));
    for (int i = 0; i < leaves; ++i) c.insert(around[static_cast<std::size_t>(i)]);
    return static_cast<long long>(g.neighborhood(c).size());
  };
  for (int n : {4, 5}) {
    const Graph g(Family::kQ, n);
    for (int gg = 0; gg <= 4; ++gg) {
      const long long formula = neighborhood_bound_formula(Family::kQ, n, gg);
      EXPECT_EQ(min_neighborhood(g, gg + 1).value, formula) << n << " g=" << gg;
      EXPECT_EQ(star_neighborhood(g, gg), formula);
    }
  }
  for (int n : {5, 6}) {
    const Graph g(Family::kFQ, n);
    for (int gg = 1; gg <= 4; ++gg) {
      const long long formula = neighborhood_bound_formula(Family::kFQ, n, gg);
      EXPECT_GE(min_neighborhood(g, gg + 1).value, formula) << n << " g=" << gg;
      EXPECT_EQ(star_neighborhood(g, gg), formula);
    }
  }
}

// --- brute_kappa_g ---

std::optional<int> oracle_kappa_g(const Graph& g, int extra) {
  const Brute b(g);
  std::optional<int> best;
  for (Bits s = 0; s < (Bits{1} << b.size); ++s) {
    const int k = __builtin_popcountll(s);
    if (best && k >= *best) continue;
    const auto parts = b.components(b.all() & ~s);
    if (parts.size() < 2) continue;
    if (std::all_of(parts.begin(), parts.end(),
                    [&](Bits p) { return __builtin_popcountll(p) > extra; })) {
      best = k;
    }
  }
  return best;
}

TEST(KappaGSearchTest, Examples) {
  EXPECT_EQ(brute_kappa_g(Graph(Family::kQ, 4), 1).value, 6);
  EXPECT_EQ(brute_kappa_g(Graph(Family::kQ, 4), 0).value, 4);
  EXPECT_EQ(brute_kappa_g(Graph(Family::kFQ, 4), 0).value, 5);
  try {
    brute_kappa_g(Graph(Family::kQ, 2), 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInfeasible);
  }
  try {
    brute_kappa_g(Graph(Family::kQ, 6), 0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kTooLarge);
  }
}

TEST(KappaGSearchTest, AgreesWithFullSubsetScan) {
  for (Family f : {Family::kQ, Family::kFQ}) {
    for (int n : {2, 3, 4}) {
      const Graph g(f, n);
      for (int extra = 0; extra <= 4; ++extra) {
        const std::optional<int> want = oracle_kappa_g(g, extra);
        if (!want) {
          EXPECT_THROW(brute_kappa_g(g, extra), Error);
          continue;
        }
        const ExtraCut got = brute_kappa_g(g, extra);
        EXPECT_EQ(got.value, *want) << family_name(f) << n << " g=" << extra;
        EXPECT_EQ(static_cast<int>(got.cut.size()), got.value);
        const auto parts = components_after_removal(g, got.cut);
        EXPECT_GE(parts.size(), 2u);
        for (const VertexSet& p : parts) EXPECT_GT(static_cast<int>(p.size()), extra);
      }
    }
  }
}

TEST(KappaGSearchTest, MatchesFormulaOnQ4) {
  const Graph g(Family::kQ, 4);
  for (int extra = 0; extra <= 4; ++extra) {
    EXPECT_EQ(brute_kappa_g(g, extra).value, kappa_g_formula(Family::kQ, 4, extra));
  }
}

// --- lemma checkers ---

TEST(CommonNeighborsTest, Examples) {
  const LemmaReport q4 = check_common_neighbors(Graph(Family::kQ, 4));
  EXPECT_TRUE(q4.passed());
  EXPECT_EQ(q4.instances_checked, 120u);
  EXPECT_TRUE(check_common_neighbors(Graph(Family::kFQ, 5)).passed());
  EXPECT_TRUE(check_common_neighbors(Graph(Family::kFQ, 4)).passed());

  const Graph fq3(Family::kFQ, 3);
  const LemmaReport bad = check_common_neighbors(fq3);
  EXPECT_FALSE(bad.passed());
  const Finding want{{bits("110", 3), bits("011", 3)},
                     {bits("100", 3), bits("010", 3), bits("001", 3), bits("111", 3)},
                     "4 common neighbours"};
  EXPECT_NE(std::find(bad.violations.begin(), bad.violations.end(), want), bad.violations.end());
  // FQ_3 is K_{4,4}: every same-side pair fails the same way.
  EXPECT_EQ(bad.violations.size(), 12u);
  for (const Finding& f : bad.violations) EXPECT_EQ(f.related.size(), 4u);
}

TEST(StarBoundsTest, Examples) {
  const Graph q4(Family::kQ, 4);
  const LemmaReport single = check_star_bounds(q4, 3, 1);
  EXPECT_TRUE(single.passed());
  EXPECT_GT(single.extremal_count, 0u);
  for (const Finding& f : single.extremal_witnesses) {
    // Equality at k = 1 comes from two leaves, never the centre.
    EXPECT_FALSE(q4.adjacent(f.subject[0], Vertex(0)));
  }
  EXPECT_TRUE(check_star_bounds(Graph(Family::kQ, 5), 4, 4).passed());
  EXPECT_TRUE(check_star_bounds(Graph(Family::kFQ, 5), 4, 3).passed());
  EXPECT_THROW(check_star_bounds(Graph(Family::kQ, 6), 2, 2), Error);
  EXPECT_THROW(check_star_bounds(Graph(Family::kQ, 4), 5, 2), Error);
}

TEST(StarBoundsTest, DetectsFailuresInSmallFoldedCubes) {
  // The bounds need n >= 5 in the folded family; below that the checker
  // must find counterexamples, which is why the solver never relies on them.
  EXPECT_FALSE(check_star_bounds(Graph(Family::kFQ, 4), 3, 2).passed());
  EXPECT_FALSE(check_star_bounds(Graph(Family::kFQ, 3), 2, 2).passed());
}

TEST(LemmaReportTest, MergeIsOrderIndependent) {
  const LemmaReport a = check_star_bounds(Graph(Family::kQ, 4), 2, 3);
  const LemmaReport b = check_star_bounds(Graph(Family::kQ, 4), 3, 3);
  const LemmaReport c = check_common_neighbors(Graph(Family::kFQ, 3));
  LemmaReport left, right;
  left.merge(a);
  left.merge(b);
  left.merge(c);
  right.merge(c);
  right.merge(b);
  right.merge(a);
  EXPECT_EQ(left.instances_checked, right.instances_checked);
  EXPECT_EQ(left.extremal_count, right.extremal_count);
  EXPECT_EQ(left.violations, right.violations);
  EXPECT_EQ(left.extremal_witnesses, right.extremal_witnesses);
  EXPECT_LE(left.extremal_witnesses.size(), LemmaReport::kMaxStoredWitnesses);
  EXPECT_EQ(left.instances_checked,
            a.instances_checked + b.instances_checked + c.instances_checked);
}

}  // namespace
}  // namespace starcut
