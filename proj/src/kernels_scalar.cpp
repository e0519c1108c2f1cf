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

// Reference kernels. These define the semantics the SIMD tables must match.

#include <cstdlib>
#include <cstring>

#include "starcut/kernels.hpp"

namespace starcut::kernels {
namespace {

// Slots whose index has bit b clear, for b < 6.
constexpr Word kLowHalfMask[6] = {
    0x5555555555555555ULL, 0x3333333333333333ULL, 0x0F0F0F0F0F0F0F0FULL,
    0x00FF00FF00FF00FFULL, 0x0000FFFF0000FFFFULL, 0x00000000FFFFFFFFULL,
};

void or_into(Word* dst, const Word* src, std::size_t words) {
  for (std::size_t i = 0; i < words; ++i) dst[i] |= src[i];
}

void and_into(Word* dst, const Word* src, std::size_t words) {
  for (std::size_t i = 0; i < words; ++i) dst[i] &= src[i];
}

void andnot_into(Word* dst, const Word* src, std::size_t words) {
  for (std::size_t i = 0; i < words; ++i) dst[i] &= ~src[i];
}

std::size_t popcount(const Word* src, std::size_t words) {
  std::size_t total = 0;
  for (std::size_t i = 0; i < words; ++i) total += __builtin_popcountll(src[i]);
  return total;
}

void flip_or_into(Word* dst, const Word* src, std::size_t words,
                  unsigned bit) {
  if (bit < 6) {
    const unsigned shift = 1u << bit;
    const Word m = kLowHalfMask[bit];
    for (std::size_t i = 0; i < words; ++i) {
      const Word w = src[i];
      dst[i] |= ((w & m) << shift) | ((w >> shift) & m);
    }
    return;
  }
  const std::size_t stride = std::size_t{1} << (bit - 6);
  for (std::size_t i = 0; i < words; ++i) dst[i] |= src[i ^ stride];
}

void complement_or_into(Word* dst, const Word* src, std::size_t words,
                        unsigned n) {
  if (n < 6) {
    const unsigned slots = 1u << n;
    dst[0] |= reverse_bits(src[0]) >> (64 - slots);
    return;
  }
  for (std::size_t i = 0; i < words; ++i) {
    dst[i] |= reverse_bits(src[words - 1 - i]);
  }
}

}  // namespace

Word reverse_bits(Word w) {
  w = ((w >> 1) & 0x5555555555555555ULL) | ((w & 0x5555555555555555ULL) << 1);
  w = ((w >> 2) & 0x3333333333333333ULL) | ((w & 0x3333333333333333ULL) << 2);
  w = ((w >> 4) & 0x0F0F0F0F0F0F0F0FULL) | ((w & 0x0F0F0F0F0F0F0F0FULL) << 4);
  return __builtin_bswap64(w);
}

const KernelTable& scalar_kernels() {
  static const KernelTable table{
      "scalar",    &or_into,      &and_into,           &andnot_into,
      &popcount,   &flip_or_into, &complement_or_into,
  };
  return table;
}

const KernelTable& active_kernels() {
  static const KernelTable* chosen = [] {
    const char* env = std::getenv("STARCUT_KERNELS");
    if (env != nullptr && std::strcmp(env, "scalar") == 0) {
      return &scalar_kernels();
    }
    const KernelTable* simd = avx2_kernels();
    return simd != nullptr ? simd : &scalar_kernels();
  }();
  return *chosen;
}

}  // namespace starcut::kernels
