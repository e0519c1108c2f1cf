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

#ifndef STARCUT_VERTEX_HPP_
#define STARCUT_VERTEX_HPP_

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>

namespace starcut {

// Number of coordinates of a hypercube label. Desk scale: 2 <= n <= 24.
class Dimension {
 public:
  static constexpr int kMin = 2;
  static constexpr int kMax = 24;

  explicit Dimension(int n);

  int value() const { return n_; }
  std::uint32_t vertex_count() const { return std::uint32_t{1} << n_; }
  std::uint32_t all_ones() const { return vertex_count() - 1; }

  friend bool operator==(Dimension, Dimension) = default;
  friend auto operator<=>(Dimension, Dimension) = default;

 private:
  int n_;
};

// A node label. Coordinate i (1-based) lives in bit i-1; rendering prints
// coordinate 1 first, so "100" is label 1.
class Vertex {
 public:
  constexpr Vertex() = default;
  constexpr explicit Vertex(std::uint32_t label) : label_(label) {}

  constexpr std::uint32_t label() const { return label_; }

  friend constexpr bool operator==(Vertex, Vertex) = default;
  friend constexpr auto operator<=>(Vertex, Vertex) = default;

 private:
  std::uint32_t label_ = 0;
};

// u^A: flips every 1-based position in A. Throws kPositionOutOfRange.
Vertex flip(Vertex v, std::span<const int> positions, Dimension n);
Vertex flip(Vertex v, std::initializer_list<int> positions, Dimension n);

// ū
Vertex complement(Vertex v, Dimension n);

// Position arithmetic taken modulo n onto {1..n}.
int wrap_position(int x, Dimension n);

int hamming_distance(Vertex a, Vertex b);

std::string to_bits(Vertex v, Dimension n);

// Parses a fixed-width binary string; its length must equal n.
Vertex parse_vertex(std::string_view bits, Dimension n);

}  // namespace starcut

#endif  // STARCUT_VERTEX_HPP_
