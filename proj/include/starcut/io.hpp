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

#ifndef STARCUT_IO_HPP_
#define STARCUT_IO_HPP_

// JSON and text forms shared by the CLI and tests.
//
//   graph:    {"family":"Q"|"FQ","n":int}
//   witness:  {"family":..,"n":..,"r":..,"stars":[{"center":"<bits>",
//              "leaves":["<bits>",...]},...]}
//
// Vertices are fixed-width bit strings with coordinate 1 leftmost.

#include <string>
#include <string_view>

#include "starcut/graph.hpp"
#include "starcut/stars.hpp"

namespace starcut {

std::string graph_to_json(const Graph& g);
Graph graph_from_json(std::string_view text);

struct Witness {
  CutFamily family;
  int r;
};

// Deterministic rendering: re-serializing a parsed witness reproduces the
// input byte for byte when the input was produced here.
std::string witness_to_json(const Witness& w);

// Throws kMalformedInput on schema errors. Star validity is not checked here.
Witness witness_from_json(std::string_view text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view contents);

}  // namespace starcut

#endif  // STARCUT_IO_HPP_
