#pragma once

// Inner loops shared by every search routine. Each kernel has a portable
// scalar reference and, on x86-64, an AVX2 variant. The active table is
// chosen once at first use from CPUID; PANCAKE_SIMD=scalar forces the
// reference path.

#include <cstddef>
#include <cstdint>
#include <string_view>

namespace pancake {

using Element = std::int32_t;

namespace kernels {

inline constexpr std::size_t npos = static_cast<std::size_t>(-1);

struct KernelTable {
  std::string_view name;
  // Breakpoints of x[0..n): adjacent pairs whose values differ by other than
  // one, plus the tail when x[n-1] != n.
  std::size_t (*count_breakpoints)(const Element* x, std::size_t n);
  // Index of the first element equal to v, or npos.
  std::size_t (*index_of)(const Element* x, std::size_t n, Element v);
  // Reverses x[0..r) in place.
  void (*reverse_prefix)(Element* x, std::size_t r);
};

const KernelTable& scalar_table() noexcept;

/// nullptr when the build or the host lacks AVX2.
const KernelTable* avx2_table() noexcept;

const KernelTable& active() noexcept;

inline std::size_t count_breakpoints(const Element* x, std::size_t n) {
  return active().count_breakpoints(x, n);
}
inline std::size_t index_of(const Element* x, std::size_t n, Element v) {
  return active().index_of(x, n, v);
}
inline void reverse_prefix(Element* x, std::size_t r) { active().reverse_prefix(x, r); }

}  // namespace kernels
}  // namespace pancake
