#include "kernels_internal.hpp"

#include <cstdlib>
#include <string_view>

namespace pancake::kernels {
namespace {

const KernelTable kScalar{"scalar", &scalar::count_breakpoints, &scalar::index_of,
                          &scalar::reverse_prefix};

#if defined(PANCAKE_HAVE_AVX2)
const KernelTable kAvx2{"avx2", &avx2::count_breakpoints, &avx2::index_of,
                        &avx2::reverse_prefix};

bool host_has_avx2() noexcept {
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2");
}
#endif

const KernelTable& select() noexcept {
  const char* forced = std::getenv("PANCAKE_SIMD");
  if (forced != nullptr && std::string_view(forced) == "scalar") return kScalar;
  if (const KernelTable* t = avx2_table()) return *t;
  return kScalar;
}

}  // namespace

const KernelTable& scalar_table() noexcept { return kScalar; }

const KernelTable* avx2_table() noexcept {
#if defined(PANCAKE_HAVE_AVX2)
  static const bool supported = host_has_avx2();
  return supported ? &kAvx2 : nullptr;
#else
  return nullptr;
#endif
}

const KernelTable& active() noexcept {
  static const KernelTable& table = select();
  return table;
}

}  // namespace pancake::kernels
