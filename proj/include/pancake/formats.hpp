#pragma once

// Text and JSON encodings shared by the CLI and the golden tests.

#include <string>
#include <string_view>
#include <vector>

#include "pancake/reduction.hpp"
#include "pancake/search.hpp"
#include "pancake/sequence.hpp"

namespace pancake {

/// Elements separated by single spaces, newline-terminated.
std::string format_permutation(const Sequence& s);

/// Integers separated by whitespace or commas, optional surrounding
/// brackets. Error(NotAPermutation) on anything else.
Sequence parse_permutation(std::string_view text);

/// Every non-blank line of `text` as a permutation.
std::vector<Sequence> parse_permutations(std::string_view text);

/// {"source", "flips", "efficient", "db_trace", "stats": {"nodes", "seconds"}}
std::string trace_json(const FlipPath& path, const SearchStats& stats, int indent = 2);

/// {"n", "db", "zones": [{"role", "index", "block", "positions": [start, end]}]}
std::string layout_json(const ReductionInstance& inst, int indent = 2);

}  // namespace pancake
