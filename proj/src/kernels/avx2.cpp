// Compiled with -mavx2; only reached through the dispatch table after a
// CPUID check.

#include "kernels_internal.hpp"

#include <immintrin.h>

#include <algorithm>
#include <bit>

namespace pancake::kernels::avx2 {

std::size_t count_breakpoints(const Element* x, std::size_t n) {
  if (n == 0) return 0;
  const __m256i one = _mm256_set1_epi32(1);
  std::size_t count = 0;
  std::size_t i = 0;
  // Each step compares x[i..i+8) with x[i+1..i+9).
  for (; i + 8 < n; i += 8) {
    const __m256i a = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(x + i));
    const __m256i b = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(x + i + 1));
    const __m256i d = _mm256_abs_epi32(_mm256_sub_epi32(a, b));
    const __m256i adjacent = _mm256_cmpeq_epi32(d, one);
    const auto mask = static_cast<unsigned>(_mm256_movemask_ps(_mm256_castsi256_ps(adjacent)));
    count += 8 - static_cast<std::size_t>(std::popcount(mask));
  }
  for (; i + 1 < n; ++i) {
    const Element d = x[i] - x[i + 1];
    count += (d != 1 && d != -1);
  }
  count += (x[n - 1] != static_cast<Element>(n));
  return count;
}

std::size_t index_of(const Element* x, std::size_t n, Element v) {
  const __m256i needle = _mm256_set1_epi32(v);
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    const __m256i a = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(x + i));
    const auto mask = static_cast<unsigned>(
        _mm256_movemask_ps(_mm256_castsi256_ps(_mm256_cmpeq_epi32(a, needle))));
    if (mask != 0) return i + static_cast<std::size_t>(std::countr_zero(mask));
  }
  for (; i < n; ++i) {
    if (x[i] == v) return i;
  }
  return npos;
}

void reverse_prefix(Element* x, std::size_t r) {
  const __m256i reversed_lanes = _mm256_set_epi32(0, 1, 2, 3, 4, 5, 6, 7);
  std::size_t lo = 0;
  std::size_t hi = r;
  // Swap mirrored 8-lane blocks from both ends until they would overlap.
  while (hi - lo >= 16) {
    auto* front = reinterpret_cast<__m256i*>(x + lo);
    auto* back = reinterpret_cast<__m256i*>(x + hi - 8);
    const __m256i a = _mm256_loadu_si256(front);
    const __m256i b = _mm256_loadu_si256(back);
    _mm256_storeu_si256(front, _mm256_permutevar8x32_epi32(b, reversed_lanes));
    _mm256_storeu_si256(back, _mm256_permutevar8x32_epi32(a, reversed_lanes));
    lo += 8;
    hi -= 8;
  }
  std::reverse(x + lo, x + hi);
}

}  // namespace pancake::kernels::avx2
