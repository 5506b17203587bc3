#include <algorithm>

#include "doctest.h"
#include "helpers.hpp"
#include "pancake/diameter.hpp"
#include "pancake/error.hpp"

using namespace pancake;

TEST_SUITE("diameter") {
  TEST_CASE("rank and unrank") {
    CHECK(factorial(0) == 1);
    CHECK(factorial(10) == 3628800);
    for (int n = 1; n <= 6; ++n) {
      std::uint64_t expected = 0;
      oracle::for_each_permutation(n, [&](const oracle::Perm& x) {
        const Block b(x.begin(), x.end());
        REQUIRE(rank_permutation(b) == expected);
        REQUIRE(unrank_permutation(expected, static_cast<std::size_t>(n)) == b);
        ++expected;
      });
    }
  }

  TEST_CASE("small diameters") {
    CHECK(diameter(1) == 0);
    CHECK(diameter(2) == 1);
    std::size_t previous = 0;
    for (std::size_t n = 1; n <= 8; ++n) {
      const std::size_t f = diameter(n);
      CHECK(f >= previous);
      previous = f;
    }
    CHECK_THROWS_AS(diameter(0), Error);
    CHECK_THROWS_AS(diameter(11), Error);
  }

  TEST_CASE("distance table matches a map-based BFS") {
    for (int n = 1; n <= 6; ++n) {
      const auto table = distance_table(static_cast<std::size_t>(n));
      int worst = 0;
      for (const auto& [x, d] : oracle::distances(n)) {
        REQUIRE(table[rank_permutation(Block(x.begin(), x.end()))] == d);
        worst = std::max(worst, d);
      }
      CHECK(diameter(static_cast<std::size_t>(n)) == static_cast<std::size_t>(worst));
    }
  }
}
