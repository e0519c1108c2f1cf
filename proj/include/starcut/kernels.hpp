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

#ifndef STARCUT_KERNELS_HPP_
#define STARCUT_KERNELS_HPP_

// Word-level kernels behind VertexSet. Every entry has a scalar reference
// implementation; an AVX2 table is picked at runtime when the CPU has it.
// Both tables must produce bit-identical results (see kernels_test).

#include <cstddef>
#include <cstdint>

namespace starcut::kernels {

using Word = std::uint64_t;

struct KernelTable {
  const char* name;
  void (*or_into)(Word* dst, const Word* src, std::size_t words);
  void (*and_into)(Word* dst, const Word* src, std::size_t words);
  // dst &= ~src
  void (*andnot_into)(Word* dst, const Word* src, std::size_t words);
  std::size_t (*popcount)(const Word* src, std::size_t words);
  // dst |= { v ^ (1 << bit) : v in src }.  `bit` must address a slot inside
  // the universe, i.e. (1 << bit) < 64 * words or the universe is one word.
  void (*flip_or_into)(Word* dst, const Word* src, std::size_t words,
                       unsigned bit);
  // dst |= { ~v mod 2^n : v in src } for a universe of 2^n slots.
  void (*complement_or_into)(Word* dst, const Word* src, std::size_t words,
                             unsigned n);
};

const KernelTable& scalar_kernels();

// nullptr when the build has no AVX2 kernels or the CPU lacks AVX2.
const KernelTable* avx2_kernels();

// The table used by VertexSet. Set STARCUT_KERNELS=scalar to force the
// reference path.
const KernelTable& active_kernels();

// Number of 64-bit words holding a universe of 2^n slots.
constexpr std::size_t words_for_dimension(unsigned n) {
  return n <= 6 ? 1 : (std::size_t{1} << (n - 6));
}

// Mask of valid bits in the last word of a 2^n universe.
constexpr Word tail_mask(unsigned n) {
  return n >= 6 ? ~Word{0} : ((Word{1} << (1u << n)) - 1);
}

Word reverse_bits(Word w);

}  // namespace starcut::kernels

#endif  // STARCUT_KERNELS_HPP_
