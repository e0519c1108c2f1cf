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

// Acceptance run: one PASS/FAIL line per criterion, exit status 0 only when
// every criterion passes. Time limits are stated on each line.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "commands.hpp"
#include "starcut/bounds.hpp"
#include "starcut/errors.hpp"
#include "starcut/oracles.hpp"

namespace starcut {
namespace {

using Clock = std::chrono::steady_clock;

struct Verdict {
  bool ok = true;
  std::string detail;

  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

double seconds_since(Clock::time_point t) {
  return std::chrono::duration<double>(Clock::now() - t).count();
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : text) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

std::string fmt_seconds(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f s", s);
  return buf;
}

// Published tables for r = 2..20.
const std::vector<std::string> kF = {"5",  "5",  "6",  "6",  "7",  "10", "31/3",
                                     "15", "15", "21", "21", "28", "28", "36",
                                     "36", "45", "45", "55", "55"};
const std::vector<std::string> kG = {"6",  "6",  "6",  "6",  "6",  "9",  "28/3",
                                     "14", "14", "20", "20", "27", "27", "35",
                                     "35", "44", "44", "54", "54"};

Verdict tables() {
  Verdict v;
  const auto t0 = Clock::now();
  std::ostringstream out, err;
  cli::Io io{out, err, {}};
  const int code = cli::cmd_tables({20}, io);
  const double took = seconds_since(t0);
  const auto lines = split(out.str(), '\n');
  if (code != cli::kExitOk) v.fail("exit " + std::to_string(code));
  if (lines.size() != 20) v.fail("expected 19 rows");
  for (std::size_t i = 1; v.ok && i < lines.size(); ++i) {
    const auto cols = split(lines[i], '\t');
    if (cols.size() != 5 || cols[0] != std::to_string(i + 1) || cols[1] != kF[i - 1] ||
        cols[2] != kG[i - 1]) {
      v.fail("row " + lines[i]);
    }
  }
  if (took >= 1.0) v.fail("took " + fmt_seconds(took));
  if (v.ok) v.detail = "r=2..20 exact, f(8)=31/3 g(8)=28/3, " + fmt_seconds(took) + " < 1 s";
  return v;
}

template <typename Fn>
void for_each_construction(Fn&& fn) {
  for (int n = 3; n <= 16; ++n) {
    for (int r = 2; r <= n; ++r) fn(Family::kQ, n, r, build_qn_cut(n, r));
    for (int r = 2; r <= n + 1; ++r) fn(Family::kFQ, n, r, build_fqn_cut(n, r));
  }
}

Verdict construction_sweep() {
  Verdict v;
  const auto t0 = Clock::now();
  int count = 0;
  for_each_construction([&](Family f, int n, int r, const CutFamily& fam) {
    ++count;
    const std::string cell = std::string(family_name(f)) + "_" + std::to_string(n) +
                             " r=" + std::to_string(r);
    const std::size_t want = f == Family::kQ ? (n + 1) / 2 : (n + 2) / 2;
    if (fam.members.size() != want) v.fail(cell + ": member count");
    for (const StarEmbedding& s : fam.members) {
      if (s.leaf_count() != r || validate_star(fam.graph, s)) v.fail(cell + ": bad star");
    }
    const VertexSet removed = fam.removal_set();
    if (removed.contains(Vertex(0)) ||
        (fam.graph.neighbors(Vertex(0)) - removed).size() != 0) {
      v.fail(cell + ": origin not isolated");
    }
    if (!is_structure_cut(fam.graph, fam, CutMode::kStructure, r)) v.fail(cell + ": not a cut");
  });
  const double took = seconds_since(t0);
  if (took >= 10.0) v.fail("took " + fmt_seconds(took));
  if (v.ok) {
    v.detail = std::to_string(count) + " families, n=3..16, sizes ceil(n/2) / ceil((n+1)/2), " +
               fmt_seconds(took) + " < 10 s";
  }
  return v;
}

Verdict intersections() {
  Verdict v;
  int overlapping = 0;
  for_each_construction([&](Family f, int n, int r, const CutFamily& fam) {
    if (f == Family::kFQ && n < 6) return;
    const Dimension d(n);
    const std::string cell = std::string(family_name(f)) + "_" + std::to_string(n) +
                             " r=" + std::to_string(r);
    const IntersectionReport rep = family_intersections(fam);
    bool expect_pair = false;
    std::size_t second = 0;
    VertexSet shared(d);
    if (f == Family::kQ && n == r && n % 2 == 1) {
      expect_pair = true;
      second = static_cast<std::size_t>((n + 1) / 2 - 1);
      shared = VertexSet(d, {flip(Vertex(0), {1}, d), flip(Vertex(0), {1, 2, n}, d)});
    }
    if (f == Family::kFQ && r == n + 1 && n % 2 == 0) {
      expect_pair = true;
      second = static_cast<std::size_t>(n / 2);
      shared = VertexSet(d, {flip(Vertex(0), {1}, d), complement(flip(Vertex(0), {1, 2}, d), d)});
    }
    if (!expect_pair) {
      if (!rep.empty()) v.fail(cell + ": unexpected overlap");
      return;
    }
    ++overlapping;
    if (rep.pairs.size() != 1 || rep.pairs[0].first != 0 || rep.pairs[0].second != second ||
        !(rep.pairs[0].shared == shared)) {
      v.fail(cell + ": wrong overlap");
    }
  });
  if (v.ok) {
    v.detail = "all other families disjoint; " + std::to_string(overlapping) +
               " single overlapping pairs as predicted (Q n=r odd, FQ n>=6 even r=n+1)";
  }
  return v;
}

Verdict solver_small_cubes() {
  Verdict v;
  const std::vector<std::pair<int, int>> cells = {{3, 2}, {3, 3}, {4, 2}, {4, 3}, {4, 4},
                                                  {5, 2}, {5, 3}, {5, 4}, {5, 5}};
  double slowest = 0;
  for (auto [n, r] : cells) {
    for (CutMode mode : {CutMode::kStructure, CutMode::kSubstructure}) {
      const Graph g(Family::kQ, n);
      const auto t0 = Clock::now();
      const SolveResult res = min_star_cut(g, r, mode);
      const double took = seconds_since(t0);
      slowest = std::max(slowest, took);
      const std::string cell = "Q_" + std::to_string(n) + " r=" + std::to_string(r) + " " +
                               std::string(mode_name(mode));
      const std::string want = "Exact(" + std::to_string((n + 1) / 2) + ")";
      if (res.summary() != want) v.fail(cell + ": " + res.summary());
      if (!res.witness || !is_structure_cut(g, *res.witness, mode, r)) {
        v.fail(cell + ": witness");
      }
      if (took > 120.0) v.fail(cell + ": took " + fmt_seconds(took));
    }
  }
  if (v.ok) v.detail = "18 cells Exact(ceil(n/2)), slowest " + fmt_seconds(slowest) + " <= 120 s";
  return v;
}

Verdict negative_case() {
  Verdict v;
  const Graph q2(Family::kQ, 2);
  if (min_star_cut(q2, 2, CutMode::kStructure).status != SolveStatus::kNoCutExists) {
    v.fail("structure is not NoCutExists");
  }
  const SolveResult sub = min_star_cut(q2, 2, CutMode::kSubstructure);
  if (sub.summary() != "Exact(2)" || !sub.witness) {
    v.fail("substructure gave " + sub.summary());
  } else {
    bool singletons = sub.witness->members.size() == 2;
    for (const StarEmbedding& s : sub.witness->members) singletons = singletons && s.leaves.empty();
    if (!singletons) v.fail("witness is not two singletons");
    if (!is_structure_cut(q2, *sub.witness, CutMode::kSubstructure, 2)) v.fail("witness invalid");
  }
  if (v.ok) v.detail = "Q_2 structure NoCutExists, substructure Exact(2) by two singletons";
  return v;
}

Verdict lemma_suite() {
  Verdict v;
  for (auto [f, n] : {std::pair{Family::kQ, 3}, {Family::kQ, 4}, {Family::kQ, 5},
                      {Family::kFQ, 4}, {Family::kFQ, 5}}) {
    if (!check_common_neighbors(Graph(f, n)).passed()) {
      v.fail(std::string("common neighbours fail on ") + std::string(family_name(f)) +
             std::to_string(n));
    }
  }
  // FQ_3 is K_{4,4} split by parity: the exceptions are exactly the
  // same-parity pairs, each seeing the whole other side.
  const Dimension d3(3);
  std::vector<std::pair<std::vector<Vertex>, std::vector<Vertex>>> want;
  for (std::uint32_t a = 0; a < 8; ++a) {
    for (std::uint32_t b = a + 1; b < 8; ++b) {
      if (__builtin_popcount(a ^ b) % 2 != 0) continue;
      std::vector<Vertex> other;
      for (std::uint32_t c = 0; c < 8; ++c) {
        if (__builtin_popcount(c ^ a) % 2 == 1) other.push_back(Vertex(c));
      }
      want.push_back({{Vertex(a), Vertex(b)}, other});
    }
  }
  std::sort(want.begin(), want.end());
  const LemmaReport fq3 = check_common_neighbors(Graph(Family::kFQ, 3));
  std::vector<std::pair<std::vector<Vertex>, std::vector<Vertex>>> got;
  for (const Finding& f : fq3.violations) got.push_back({f.subject, f.related});
  std::sort(got.begin(), got.end());
  if (got != want) v.fail("FQ_3 exception set differs from the same-parity pairs");
  const std::vector<Vertex> named = {parse_vertex("110", d3), parse_vertex("011", d3)};
  if (std::none_of(got.begin(), got.end(), [&](const auto& p) { return p.first == named; })) {
    v.fail("FQ_3 exception (011,110) missing");
  }

  std::uint64_t instances = 0;
  for (auto [f, n, kmax] : {std::tuple{Family::kQ, 4, 5}, {Family::kQ, 5, 5},
                            {Family::kFQ, 5, 4}}) {
    const Graph g(f, n);
    const int top = f == Family::kQ ? n : n + 1;
    for (int r = 2; r <= top; ++r) {
      const LemmaReport rep = check_star_bounds(g, r, kmax);
      instances += rep.instances_checked;
      if (!rep.passed()) {
        v.fail(std::string("star bounds fail on ") + std::string(family_name(f)) +
               std::to_string(n) + " r=" + std::to_string(r));
      }
    }
  }
  if (v.ok) {
    v.detail = "common neighbours pass; FQ_3 exceptions = 12 same-parity pairs incl. "
               "(011,110); star bounds pass on " +
               std::to_string(instances) + " instances, 0 violations";
  }
  return v;
}

Verdict formulas() {
  Verdict v;
  int checks = 0;
  for (auto [f, n, top] : {std::tuple{Family::kQ, 4, 4}, {Family::kQ, 5, 4},
                           {Family::kFQ, 5, 3}, {Family::kFQ, 6, 3}}) {
    const Graph g(f, n);
    const int lo = f == Family::kQ ? 0 : 1;
    for (int extra = lo; extra <= top; ++extra) {
      ++checks;
      const long long want = neighborhood_bound_formula(f, n, extra);
      const int got = min_neighborhood(g, extra + 1).value;
      if (got != want) {
        v.fail(std::string(family_name(f)) + std::to_string(n) + " g=" + std::to_string(extra) +
               ": " + std::to_string(got) + " vs " + std::to_string(want));
      }
    }
  }
  const Graph q4(Family::kQ, 4);
  for (int extra = 0; extra <= 4; ++extra) {
    ++checks;
    if (brute_kappa_g(q4, extra).value != kappa_g_formula(Family::kQ, 4, extra)) {
      v.fail("kappa_g(Q_4, " + std::to_string(extra) + ")");
    }
  }
  ++checks;
  if (brute_kappa_g(Graph(Family::kFQ, 4), 0).value != 5) v.fail("kappa_0(FQ_4) != 5");
  if (v.ok) v.detail = std::to_string(checks) + " formula/search equalities, exact";
  return v;
}

Verdict folded_basics() {
  Verdict v;
  if (odd_girth(Graph(Family::kFQ, 3))) v.fail("FQ_3 has an odd cycle");
  if (odd_girth(Graph(Family::kFQ, 4)) != 5) v.fail("odd girth FQ_4");
  if (odd_girth(Graph(Family::kFQ, 6)) != 7) v.fail("odd girth FQ_6");
  if (min_vertex_cut(Graph(Family::kFQ, 3)) != 4) v.fail("kappa(FQ_3)");
  if (min_vertex_cut(Graph(Family::kFQ, 4)) != 5) v.fail("kappa(FQ_4)");
  if (v.ok) v.detail = "odd girth none/5/7, connectivity FQ_3=4 FQ_4=5";
  return v;
}

CutFamily parse_family_text(const Graph& g, const std::string& text) {
  CutFamily fam{g, {}};
  for (const std::string& star : split(text, ' ')) {
    const auto halves = split(star, ':');
    StarEmbedding s{parse_vertex(halves.at(0), g.dim()), {}};
    if (halves.size() > 1) {
      for (const std::string& leaf : split(halves[1], ',')) {
        s.leaves.push_back(parse_vertex(leaf, g.dim()));
      }
    }
    fam.members.push_back(s);
  }
  return fam;
}

Verdict conjecture_harness() {
  Verdict v;
  std::ostringstream out, err;
  cli::Io io{out, err, {}};
  cli::ConjectureOptions small;
  small.family = Family::kFQ;
  small.n = {3, 4};
  small.r = {2, 3};
  if (cli::cmd_conjecture(small, io) != cli::kExitOk) v.fail("FQ grid did not finish cleanly");
  const auto rows = split(out.str(), '\n');
  if (rows.size() != 5) v.fail("FQ grid should have 4 cells");
  for (std::size_t i = 1; v.ok && i < rows.size(); ++i) {
    const auto cols = split(rows[i], '\t');
    const int n = std::stoi(cols.at(1));
    const int r = std::stoi(cols.at(2));
    const Graph g(Family::kFQ, n);
    const std::string& value = cols.at(5);
    if (value.rfind("Exact(", 0) != 0) {
      v.fail(rows[i] + ": not definitive");
      break;
    }
    const int k = std::stoi(value.substr(6));
    const CutFamily fam = parse_family_text(g, cols.at(8));
    if (static_cast<int>(fam.members.size()) != k ||
        !is_structure_cut(g, fam, CutMode::kStructure, r)) {
      v.fail(rows[i] + ": witness does not verify");
    }
    if (k > (n + 2) / 2) v.fail(rows[i] + ": above the construction");
  }

  std::ostringstream out7, err7;
  cli::Io io7{out7, err7, {}};
  cli::ConjectureOptions big;
  big.family = Family::kQ;
  big.n = {7, 7};
  big.r = {7, 7};
  const auto t0 = Clock::now();
  const int code = cli::cmd_conjecture(big, io7);
  const double took = seconds_since(t0);
  const auto cols = split(split(out7.str(), '\n').back(), '\t');
  if (code != cli::kExitInconclusive || cols.size() < 8 || cols[7] != "OPEN(4)") {
    v.fail("Q_7 r=7 was not OPEN(4)");
  }
  const CutFamily upper = build_qn_cut(7, 7);
  if (upper.members.size() != 4 || !is_structure_cut(upper.graph, upper, CutMode::kStructure, 7)) {
    v.fail("Q_7 upper bound does not verify");
  }
  if (took > 90.0) v.fail("Q_7 took " + fmt_seconds(took));
  if (v.ok) {
    v.detail = "FQ_3..4 r=2..3 definitive and verified, <= ceil((n+1)/2); Q_7 r=7 OPEN(4) in " +
               fmt_seconds(took) + " (default 60 s budget, limit 90 s)";
  }
  return v;
}

}  // namespace
}  // namespace starcut

int main() {
  using starcut::Verdict;
  const std::vector<std::pair<const char*, std::function<Verdict()>>> criteria = {
      {"tables", starcut::tables},
      {"construction sweep", starcut::construction_sweep},
      {"intersections", starcut::intersections},
      {"exact solver", starcut::solver_small_cubes},
      {"negative case", starcut::negative_case},
      {"lemma suite", starcut::lemma_suite},
      {"formula vs search", starcut::formulas},
      {"folded basics", starcut::folded_basics},
      {"conjecture harness", starcut::conjecture_harness},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Verdict v;
    try {
      v = criteria[i].second();
    } catch (const std::exception& e) {
      v.fail(std::string("exception: ") + e.what());
    }
    failed += v.ok ? 0 : 1;
    std::cout << "criterion " << i + 1 << " " << (v.ok ? "PASS" : "FAIL") << "  "
              << criteria[i].first << ": " << v.detail << std::endl;
  }
  return failed == 0 ? 0 : 1;
}
