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

// AVX2 variants of the bitset kernels. This translation unit is compiled
// with -mavx2; nothing here may run before avx2_kernels() has checked the CPU.

#include "starcut/kernels.hpp"

#if defined(STARCUT_HAVE_AVX2)

#include <immintrin.h>

namespace starcut::kernels {
namespace {

constexpr Word kLowHalfMask[6] = {
    0x5555555555555555ULL, 0x3333333333333333ULL, 0x0F0F0F0F0F0F0F0FULL,
    0x00FF00FF00FF00FFULL, 0x0000FFFF0000FFFFULL, 0x00000000FFFFFFFFULL,
};

inline __m256i load(const Word* p) {
  return _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p));
}

inline void store(Word* p, __m256i v) {
  _mm256_storeu_si256(reinterpret_cast<__m256i*>(p), v);
}

void or_into(Word* dst, const Word* src, std::size_t words) {
  std::size_t i = 0;
  for (; i + 4 <= words; i += 4) {
    store(dst + i, _mm256_or_si256(load(dst + i), load(src + i)));
  }
  for (; i < words; ++i) dst[i] |= src[i];
}

void and_into(Word* dst, const Word* src, std::size_t words) {
  std::size_t i = 0;
  for (; i + 4 <= words; i += 4) {
    store(dst + i, _mm256_and_si256(load(dst + i), load(src + i)));
  }
  for (; i < words; ++i) dst[i] &= src[i];
}

void andnot_into(Word* dst, const Word* src, std::size_t words) {
  std::size_t i = 0;
  for (; i + 4 <= words; i += 4) {
    // _mm256_andnot_si256(a, b) = ~a & b
    store(dst + i, _mm256_andnot_si256(load(src + i), load(dst + i)));
  }
  for (; i < words; ++i) dst[i] &= ~src[i];
}

// Nibble lookup popcount with horizontal byte sums (Mula et al.).
std::size_t popcount(const Word* src, std::size_t words) {
  const __m256i lookup = _mm256_setr_epi8(
      0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4,
      0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
  const __m256i low = _mm256_set1_epi8(0x0F);
  __m256i acc = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + 4 <= words; i += 4) {
    const __m256i v = load(src + i);
    const __m256i lo = _mm256_and_si256(v, low);
    const __m256i hi = _mm256_and_si256(_mm256_srli_epi16(v, 4), low);
    const __m256i counts = _mm256_add_epi8(_mm256_shuffle_epi8(lookup, lo),
                                           _mm256_shuffle_epi8(lookup, hi));
    acc = _mm256_add_epi64(acc, _mm256_sad_epu8(counts, _mm256_setzero_si256()));
  }
  alignas(32) Word lanes[4];
  _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc);
  std::size_t total = lanes[0] + lanes[1] + lanes[2] + lanes[3];
  for (; i < words; ++i) total += __builtin_popcountll(src[i]);
  return total;
}

void flip_or_into(Word* dst, const Word* src, std::size_t words,
                  unsigned bit) {
  if (words < 4) {
    scalar_kernels().flip_or_into(dst, src, words, bit);
    return;
  }
  if (bit < 6) {
    const __m128i shift = _mm_cvtsi32_si128(1 << bit);
    const __m256i m = _mm256_set1_epi64x(static_cast<long long>(kLowHalfMask[bit]));
    for (std::size_t i = 0; i < words; i += 4) {
      const __m256i w = load(src + i);
      const __m256i up = _mm256_sll_epi64(_mm256_and_si256(w, m), shift);
      const __m256i down = _mm256_and_si256(_mm256_srl_epi64(w, shift), m);
      store(dst + i, _mm256_or_si256(load(dst + i), _mm256_or_si256(up, down)));
    }
    return;
  }
  if (bit == 6 || bit == 7) {
    for (std::size_t i = 0; i < words; i += 4) {
      const __m256i w = load(src + i);
      const __m256i p = bit == 6 ? _mm256_permute4x64_epi64(w, 0xB1)
                                 : _mm256_permute4x64_epi64(w, 0x4E);
      store(dst + i, _mm256_or_si256(load(dst + i), p));
    }
    return;
  }
  const std::size_t stride = std::size_t{1} << (bit - 6);
  for (std::size_t i = 0; i < words; i += 4) {
    store(dst + i, _mm256_or_si256(load(dst + i), load(src + (i ^ stride))));
  }
}

// Full bit reversal of four words, also reversing their order.
inline __m256i reverse_block(__m256i v) {
  const __m256i byte_rev = _mm256_setr_epi8(
      7, 6, 5, 4, 3, 2, 1, 0, 15, 14, 13, 12, 11, 10, 9, 8,
      7, 6, 5, 4, 3, 2, 1, 0, 15, 14, 13, 12, 11, 10, 9, 8);
  const __m256i rev_lo = _mm256_setr_epi8(
      0x00, 0x80, 0x40, 0xC0, 0x20, 0xA0, 0x60, 0xE0,
      0x10, 0x90, 0x50, 0xD0, 0x30, 0xB0, 0x70, 0xF0,
      0x00, 0x80, 0x40, 0xC0, 0x20, 0xA0, 0x60, 0xE0,
      0x10, 0x90, 0x50, 0xD0, 0x30, 0xB0, 0x70, 0xF0);
  const __m256i rev_hi = _mm256_setr_epi8(
      0x0, 0x8, 0x4, 0xC, 0x2, 0xA, 0x6, 0xE, 0x1, 0x9, 0x5, 0xD, 0x3, 0xB, 0x7, 0xF,
      0x0, 0x8, 0x4, 0xC, 0x2, 0xA, 0x6, 0xE, 0x1, 0x9, 0x5, 0xD, 0x3, 0xB, 0x7, 0xF);
  const __m256i low = _mm256_set1_epi8(0x0F);
  v = _mm256_permute4x64_epi64(v, 0x1B);
  v = _mm256_shuffle_epi8(v, byte_rev);
  const __m256i lo = _mm256_and_si256(v, low);
  const __m256i hi = _mm256_and_si256(_mm256_srli_epi16(v, 4), low);
  return _mm256_or_si256(_mm256_shuffle_epi8(rev_lo, lo),
                         _mm256_shuffle_epi8(rev_hi, hi));
}

void complement_or_into(Word* dst, const Word* src, std::size_t words,
                        unsigned n) {
  if (words < 4) {
    scalar_kernels().complement_or_into(dst, src, words, n);
    return;
  }
  for (std::size_t i = 0; i < words; i += 4) {
    const __m256i mirrored = reverse_block(load(src + (words - 4 - i)));
    store(dst + i, _mm256_or_si256(load(dst + i), mirrored));
  }
}

}  // namespace

const KernelTable* avx2_kernels() {
  static const bool supported = __builtin_cpu_supports("avx2");
  static const KernelTable table{
      "avx2",     &or_into,      &and_into,           &andnot_into,
      &popcount,  &flip_or_into, &complement_or_into,
  };
  return supported ? &table : nullptr;
}

}  // namespace starcut::kernels

#else

namespace starcut::kernels {

const KernelTable* avx2_kernels() { return nullptr; }

}  // namespace starcut::kernels

#endif
