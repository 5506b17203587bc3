#include <random>

#include "doctest.h"
#include "pancake/kernels.hpp"

using namespace pancake;

namespace {

std::vector<Element> random_values(std::size_t n, std::mt19937_64& rng) {
  std::vector<Element> x(n);
  std::uniform_int_distribution<Element> dist(-3, 40);
  for (auto& v : x) v = dist(rng);
  return x;
}

}  // namespace

TEST_SUITE("kernels") {
  TEST_CASE("scalar kernels") {
    const auto& k = kernels::scalar_table();
    const std::vector<Element> x{5, 2, 3, 1, 4};
    CHECK(k.count_breakpoints(x.data(), x.size()) == 4);
    CHECK(k.index_of(x.data(), x.size(), 1) == 3);
    CHECK(k.index_of(x.data(), x.size(), 9) == kernels::npos);
    std::vector<Element> y = x;
    k.reverse_prefix(y.data(), 3);
    CHECK(y == std::vector<Element>{3, 2, 5, 1, 4});
  }

  TEST_CASE("vector kernels agree with the scalar reference") {
    const kernels::KernelTable* wide = kernels::avx2_table();
    if (wide == nullptr) {
      MESSAGE("AVX2 not available on this machine; skipped");
      return;
    }
    const auto& ref = kernels::scalar_table();
    std::mt19937_64 rng(5);
    for (std::size_t n = 1; n <= 80; ++n) {
      for (int trial = 0; trial < 40; ++trial) {
        const auto x = random_values(n, rng);
        REQUIRE(wide->count_breakpoints(x.data(), n) == ref.count_breakpoints(x.data(), n));
        const Element needle = std::uniform_int_distribution<Element>(-3, 40)(rng);
        REQUIRE(wide->index_of(x.data(), n, needle) == ref.index_of(x.data(), n, needle));
        for (std::size_t r = 0; r <= n; ++r) {
          auto a = x;
          auto b = x;
          wide->reverse_prefix(a.data(), r);
          ref.reverse_prefix(b.data(), r);
          REQUIRE(a == b);
        }
      }
    }
  }

  TEST_CASE("dispatch picks a table") {
    const auto& k = kernels::active();
    CHECK((k.name == "scalar" || k.name == "avx2"));
  }
}
