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

#include "starcut/vertex_set.hpp"

#include <string>

#include "starcut/errors.hpp"

namespace starcut {

VertexSet::VertexSet(Dimension n)
    : n_(n), words_(kernels::words_for_dimension(n.value()), 0) {}

VertexSet::VertexSet(Dimension n, std::initializer_list<Vertex> members)
    : VertexSet(n) {
  for (Vertex v : members) insert(v);
}

VertexSet::VertexSet(Dimension n, std::span<const Vertex> members)
    : VertexSet(n) {
  for (Vertex v : members) insert(v);
}

VertexSet VertexSet::full(Dimension n) {
  VertexSet s(n);
  for (auto& w : s.words_) w = ~kernels::Word{0};
  s.words_.back() &= kernels::tail_mask(n.value());
  return s;
}

void VertexSet::insert(Vertex v) {
  if (v.label() >= n_.vertex_count()) {
    throw Error(ErrorCode::kInvalidVertex,
                "label " + std::to_string(v.label()) + " >= 2^" +
                    std::to_string(n_.value()));
  }
  words_[v.label() >> 6] |= kernels::Word{1} << (v.label() & 63);
}

void VertexSet::erase(Vertex v) {
  if (v.label() >= n_.vertex_count()) return;
  words_[v.label() >> 6] &= ~(kernels::Word{1} << (v.label() & 63));
}

bool VertexSet::contains(Vertex v) const {
  if (v.label() >= n_.vertex_count()) return false;
  return (words_[v.label() >> 6] >> (v.label() & 63)) & 1u;
}

std::size_t VertexSet::size() const {
  return kernels::active_kernels().popcount(words_.data(), words_.size());
}

bool VertexSet::empty() const {
  for (auto w : words_) {
    if (w != 0) return false;
  }
  return true;
}

std::optional<Vertex> VertexSet::min() const {
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if (words_[i] != 0) {
      return Vertex(static_cast<std::uint32_t>(i * 64 +
                                               __builtin_ctzll(words_[i])));
    }
  }
  return std::nullopt;
}

std::vector<Vertex> VertexSet::to_vector() const {
  std::vector<Vertex> out;
  for_each([&](Vertex v) { out.push_back(v); });
  return out;
}

bool VertexSet::intersects(const VertexSet& other) const {
  check_same_dimension(other);
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if ((words_[i] & other.words_[i]) != 0) return true;
  }
  return false;
}

bool VertexSet::is_subset_of(const VertexSet& other) const {
  check_same_dimension(other);
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if ((words_[i] & ~other.words_[i]) != 0) return false;
  }
  return true;
}

VertexSet& VertexSet::operator|=(const VertexSet& other) {
  check_same_dimension(other);
  kernels::active_kernels().or_into(words_.data(), other.words_.data(),
                                    words_.size());
  return *this;
}

VertexSet& VertexSet::operator&=(const VertexSet& other) {
  check_same_dimension(other);
  kernels::active_kernels().and_into(words_.data(), other.words_.data(),
                                     words_.size());
  return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& other) {
  check_same_dimension(other);
  kernels::active_kernels().andnot_into(words_.data(), other.words_.data(),
                                        words_.size());
  return *this;
}

void VertexSet::check_same_dimension(const VertexSet& other) const {
  if (other.n_ != n_) {
    throw Error(ErrorCode::kInvalidDimension,
                "mixing vertex sets of dimension " + std::to_string(n_.value()) +
                    " and " + std::to_string(other.n_.value()));
  }
}

}  // namespace starcut
