#pragma once

// Breadth-first search over the whole pancake network for small n.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "pancake/search.hpp"
#include "pancake/sequence.hpp"

namespace pancake {

/// Lexicographic rank in [0, n!) via the factorial number system; n <= 20.
std::uint64_t rank_permutation(std::span<const Element> x);
Block unrank_permutation(std::uint64_t rank, std::size_t n);

std::uint64_t factorial(std::size_t n);

/// Sorting distance of every permutation of 1..n, indexed by rank. Flips are
/// involutions, so the BFS layer from the identity is the sorting distance.
/// Error(TooLarge) past limits.max_diameter_n.
std::vector<std::uint8_t> distance_table(std::size_t n, const SearchLimits& limits = {});

/// f(n): the largest sorting distance over all stacks of n pancakes.
std::size_t diameter(std::size_t n, const SearchLimits& limits = {});

}  // namespace pancake
