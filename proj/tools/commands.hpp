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

#ifndef STARCUT_TOOLS_COMMANDS_HPP_
#define STARCUT_TOOLS_COMMANDS_HPP_

// The starcut subcommands as plain functions over an output pair, so the
// binary and the tests drive the same code.

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "starcut/graph.hpp"
#include "starcut/oracles.hpp"
#include "starcut/stars.hpp"

namespace starcut::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitFailure = 1,  // internal error or disagreement with a settled value
  kExitUsage = 2,
  kExitInconclusive = 3,
};

struct Range {
  int lo = 0;
  int hi = 0;
};

// "3..5" or "4". Throws kMalformedInput.
Range parse_range(const std::string& text);

struct Io {
  std::ostream& out;
  std::ostream& err;
  std::vector<std::string> artifacts;
};

struct TablesOptions {
  int max_r = 20;
};

struct ConstructOptions {
  Family family = Family::kQ;
  int n = 0;
  int r = 0;
  std::string out;  // empty: verify in memory only
};

struct VerifyOptions {
  std::string witness;
  CutMode mode = CutMode::kStructure;
};

struct SolveOptions {
  Family family = Family::kQ;
  int n = 0;
  int r = 0;
  CutMode mode = CutMode::kStructure;
  SearchBudget budget;
  std::string certificate = "starcut_certificate.json";
  std::string check_witness;  // when set, verify this file instead of solving
};

struct LemmasOptions {
  std::string id;
  Family family = Family::kQ;
  Range n{3, 5};
  std::optional<int> r;       // star-bounds; default every 2 <= r <= degree
  int kmax = 4;               // star-bounds
  std::optional<Range> g;     // neighborhood, kappa-g
};

struct ConjectureOptions {
  Family family = Family::kQ;
  Range n{3, 5};
  Range r{2, 5};
  std::vector<CutMode> modes{CutMode::kStructure};
  SearchBudget budget;
};

int cmd_tables(const TablesOptions& o, Io& io);
int cmd_construct(const ConstructOptions& o, Io& io);
int cmd_verify(const VerifyOptions& o, Io& io);
int cmd_solve(const SolveOptions& o, Io& io);
int cmd_lemmas(const LemmasOptions& o, Io& io);
int cmd_conjecture(const ConjectureOptions& o, Io& io);

// Full command line: parsing, dispatch, error mapping and the one-line JSON
// run record on `err`.
int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err);

}  // namespace starcut::cli

#endif  // STARCUT_TOOLS_COMMANDS_HPP_
