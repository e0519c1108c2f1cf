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

#ifndef STARCUT_VERTEX_SET_HPP_
#define STARCUT_VERTEX_SET_HPP_

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

#include "starcut/kernels.hpp"
#include "starcut/vertex.hpp"

namespace starcut {

// Bitset over the 2^n labels of one dimension.
class VertexSet {
 public:
  explicit VertexSet(Dimension n);
  VertexSet(Dimension n, std::initializer_list<Vertex> members);
  VertexSet(Dimension n, std::span<const Vertex> members);

  static VertexSet full(Dimension n);

  Dimension dim() const { return n_; }

  // Throws kInvalidVertex for labels outside [0, 2^n).
  void insert(Vertex v);
  void erase(Vertex v);
  bool contains(Vertex v) const;

  std::size_t size() const;
  bool empty() const;
  std::optional<Vertex> min() const;
  std::vector<Vertex> to_vector() const;

  template <typename Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      kernels::Word bits = words_[w];
      while (bits != 0) {
        const int b = __builtin_ctzll(bits);
        fn(Vertex(static_cast<std::uint32_t>(w * 64 + b)));
        bits &= bits - 1;
      }
    }
  }

  bool intersects(const VertexSet& other) const;
  bool is_subset_of(const VertexSet& other) const;

  VertexSet& operator|=(const VertexSet& other);
  VertexSet& operator&=(const VertexSet& other);
  VertexSet& operator-=(const VertexSet& other);

  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

  friend bool operator==(const VertexSet& a, const VertexSet& b) {
    return a.n_ == b.n_ && a.words_ == b.words_;
  }

  std::span<const kernels::Word> words() const { return words_; }
  std::span<kernels::Word> mutable_words() { return words_; }

 private:
  void check_same_dimension(const VertexSet& other) const;

  Dimension n_;
  std::vector<kernels::Word> words_;
};

}  // namespace starcut

#endif  // STARCUT_VERTEX_SET_HPP_
