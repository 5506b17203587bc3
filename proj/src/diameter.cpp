#include "pancake/diameter.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "pancake/error.hpp"

namespace pancake {

std::uint64_t factorial(std::size_t n) {
  std::uint64_t f = 1;
  for (std::size_t i = 2; i <= n; ++i) f *= i;
  return f;
}

std::uint64_t rank_permutation(std::span<const Element> x) {
  const std::size_t n = x.size();
  std::uint32_t used = 0;
  std::uint64_t rank = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const auto v = static_cast<std::uint32_t>(x[i] - 1);
    const auto smaller_used = static_cast<std::uint32_t>(std::popcount(used & ((1u << v) - 1)));
    rank = rank * (n - i) + (v - smaller_used);
    used |= 1u << v;
  }
  return rank;
}

Block unrank_permutation(std::uint64_t rank, std::size_t n) {
  std::vector<std::size_t> digits(n);
  for (std::size_t i = n; i-- > 0;) {
    const std::size_t base = n - i;
    digits[i] = static_cast<std::size_t>(rank % base);
    rank /= base;
  }
  Block pool = ident(1, static_cast<Element>(n));
  Block out;
  out.reserve(n);
  for (std::size_t d : digits) {
    out.push_back(pool[d]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(d));
  }
  return out;
}

std::vector<std::uint8_t> distance_table(std::size_t n, const SearchLimits& limits) {
  if (n < 1 || n > limits.max_diameter_n) {
    throw Error(Errc::TooLarge, "diameter limited to 1 <= n <= " +
                                    std::to_string(limits.max_diameter_n) + ", got n = " +
                                    std::to_string(n));
  }
  constexpr std::uint8_t kUnseen = 0xff;
  const std::uint64_t states = factorial(n);
  std::vector<std::uint8_t> dist(states, kUnseen);

  std::vector<std::uint64_t> frontier{rank_permutation(ident(1, static_cast<Element>(n)))};
  dist[frontier.front()] = 0;
  std::vector<std::uint64_t> next;
  for (std::uint8_t layer = 1; !frontier.empty(); ++layer) {
    next.clear();
    for (std::uint64_t r : frontier) {
      Block x = unrank_permutation(r, n);
      for (std::size_t len = 2; len <= n; ++len) {
        kernels::reverse_prefix(x.data(), len);
        const std::uint64_t nr = rank_permutation(x);
        if (dist[nr] == kUnseen) {
          dist[nr] = layer;
          next.push_back(nr);
        }
        kernels::reverse_prefix(x.data(), len);
      }
    }
    frontier.swap(next);
  }
  return dist;
}

std::size_t diameter(std::size_t n, const SearchLimits& limits) {
  const auto dist = distance_table(n, limits);
  return *std::max_element(dist.begin(), dist.end());
}

}  // namespace pancake
