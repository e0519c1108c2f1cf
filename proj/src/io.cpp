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

#include "starcut/io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "starcut/errors.hpp"

namespace starcut {
namespace {

using Json = nlohmann::ordered_json;

Json graph_fields(const Graph& g) {
  Json j;
  j["family"] = std::string(family_name(g.family()));
  j["n"] = g.n();
  return j;
}

Graph graph_from(const Json& j) {
  if (!j.is_object() || !j.contains("family") || !j.contains("n") ||
      !j["family"].is_string() || !j["n"].is_number_integer()) {
    throw Error(ErrorCode::kMalformedInput,
                "expected {\"family\":\"Q\"|\"FQ\",\"n\":int}");
  }
  const auto fam = j["family"].get<std::string>();
  if (fam != "Q" && fam != "FQ") {
    throw Error(ErrorCode::kMalformedInput, "family must be Q or FQ");
  }
  return Graph(parse_family(fam), Dimension(j["n"].get<int>()));
}

Json parse(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kMalformedInput, e.what());
  }
}

Vertex vertex_from(const Json& j, Dimension n) {
  if (!j.is_string()) {
    throw Error(ErrorCode::kMalformedInput, "vertex must be a bit string");
  }
  return parse_vertex(j.get<std::string>(), n);
}

}  // namespace

std::string graph_to_json(const Graph& g) { return graph_fields(g).dump(); }

Graph graph_from_json(std::string_view text) { return graph_from(parse(text)); }

std::string witness_to_json(const Witness& w) {
  const Dimension n = w.family.graph.dim();
  Json j = graph_fields(w.family.graph);
  j["r"] = w.r;
  Json stars = Json::array();
  for (const auto& s : w.family.members) {
    Json star;
    star["center"] = to_bits(s.center, n);
    Json leaves = Json::array();
    for (Vertex l : s.leaves) leaves.push_back(to_bits(l, n));
    star["leaves"] = std::move(leaves);
    stars.push_back(std::move(star));
  }
  j["stars"] = std::move(stars);
  return j.dump(2) + "\n";
}

Witness witness_from_json(std::string_view text) {
  const Json j = parse(text);
  const Graph g = graph_from(j);
  if (!j.contains("r") || !j["r"].is_number_integer() || !j.contains("stars") ||
      !j["stars"].is_array()) {
    throw Error(ErrorCode::kMalformedInput,
                "witness needs integer \"r\" and array \"stars\"");
  }
  Witness w{CutFamily{g, {}}, j["r"].get<int>()};
  for (const auto& star : j["stars"]) {
    if (!star.is_object() || !star.contains("center") ||
        !star.contains("leaves") || !star["leaves"].is_array()) {
      throw Error(ErrorCode::kMalformedInput,
                  "star needs \"center\" and array \"leaves\"");
    }
    StarEmbedding s{vertex_from(star["center"], g.dim()), {}};
    for (const auto& leaf : star["leaves"]) {
      s.leaves.push_back(vertex_from(leaf, g.dim()));
    }
    w.family.members.push_back(std::move(s));
  }
  return w;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kMalformedInput, "cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::kMalformedInput, "cannot write " + path);
  out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
  if (!out) throw Error(ErrorCode::kMalformedInput, "short write to " + path);
}

}  // namespace starcut
