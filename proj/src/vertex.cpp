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

#include "starcut/vertex.hpp"

#include <string>

#include "starcut/errors.hpp"

namespace starcut {

Dimension::Dimension(int n) : n_(n) {
  if (n < kMin || n > kMax) {
    throw Error(ErrorCode::kInvalidDimension,
                "n=" + std::to_string(n) + " outside [2, 24]");
  }
}

Vertex flip(Vertex v, std::span<const int> positions, Dimension n) {
  std::uint32_t label = v.label();
  for (int p : positions) {
    if (p < 1 || p > n.value()) {
      throw Error(ErrorCode::kPositionOutOfRange,
                  "position " + std::to_string(p) + " not in 1.." +
                      std::to_string(n.value()));
    }
    label ^= std::uint32_t{1} << (p - 1);
  }
  return Vertex(label);
}

Vertex flip(Vertex v, std::initializer_list<int> positions, Dimension n) {
  return flip(v, std::span<const int>(positions.begin(), positions.size()), n);
}

Vertex complement(Vertex v, Dimension n) {
  return Vertex(v.label() ^ n.all_ones());
}

int wrap_position(int x, Dimension n) {
  const int m = n.value();
  return ((x - 1) % m + m) % m + 1;
}

int hamming_distance(Vertex a, Vertex b) {
  return __builtin_popcount(a.label() ^ b.label());
}

std::string to_bits(Vertex v, Dimension n) {
  std::string out(n.value(), '0');
  for (int i = 0; i < n.value(); ++i) {
    if ((v.label() >> i) & 1u) out[i] = '1';
  }
  return out;
}

Vertex parse_vertex(std::string_view bits, Dimension n) {
  if (static_cast<int>(bits.size()) != n.value()) {
    throw Error(ErrorCode::kMalformedInput,
                "vertex '" + std::string(bits) + "' is not " +
                    std::to_string(n.value()) + " bits wide");
  }
  std::uint32_t label = 0;
  for (int i = 0; i < n.value(); ++i) {
    if (bits[i] == '1') {
      label |= std::uint32_t{1} << i;
    } else if (bits[i] != '0') {
      throw Error(ErrorCode::kMalformedInput,
                  "vertex '" + std::string(bits) + "' has a non-binary digit");
    }
  }
  return Vertex(label);
}

}  // namespace starcut
