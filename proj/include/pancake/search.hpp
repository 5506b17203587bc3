#pragma once

// Searches over the flip graph: efficient-sortability, the funnel relation
// S => T, exact sorting distance and a greedy sorter.

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "pancake/sequence.hpp"

namespace pancake {

/// Desk-scale guards. The defaults can be overridden by callers who know
/// what they are asking for (the CLI exposes them as expert flags).
struct SearchLimits {
  std::size_t node_budget = 10'000'000;
  std::size_t max_exact_n = 12;
  std::size_t max_diameter_n = 10;
};

struct SearchStats {
  std::size_t nodes_expanded = 0;
  std::size_t max_depth = 0;
  double elapsed_seconds = 0.0;
};

/// Reorders the efficient flips available at `state`; the search tries them
/// in the resulting order. Without a hint, shorter flips go first.
using OrderHint = std::function<void(std::span<const Element> state, FlipSet& candidates)>;

struct Decision {
  std::optional<FlipPath> path;  // efficient, length db(S), ends at identity
  SearchStats stats;
};

/// Depth-first enumeration of efficient flips with a memo of states proven
/// not efficiently sortable. Throws Error(TooLarge) past the node budget.
Decision decide_efficiently_sortable(const Sequence& s, const OrderHint& hint = {},
                                     const SearchLimits& limits = {});

/// An efficient path from `from` to `to`, if one exists.
std::optional<FlipPath> find_efficient_path(const Sequence& from, const Sequence& to,
                                            const OrderHint& hint = {},
                                            const SearchLimits& limits = {},
                                            SearchStats* stats = nullptr);

struct FunnelReport {
  bool holds = false;
  std::vector<Sequence> unreachable_targets;
  std::optional<FlipPath> leaking_path;  // efficient path to identity avoiding every target
  std::size_t states_explored = 0;
};

/// Checks S => targets: every target is reachable by an efficient path, and
/// every efficient path from S to the identity meets a target. Throws
/// Error(SIsIdentity) when S is sorted already.
FunnelReport verify_funnel(const Sequence& s, std::span<const Sequence> targets,
                           const SearchLimits& limits = {});

struct DistanceResult {
  std::size_t distance = 0;
  FlipPath witness;
  SearchStats stats;
};

/// Minimum number of flips, by IDA* with the breakpoint count as heuristic.
/// Error(TooLarge) when n exceeds limits.max_exact_n.
DistanceResult exact_distance(const Sequence& s, const SearchLimits& limits = {});

/// Takes an efficient flip when there is one, the shorter unless it leads
/// straight into a deadlock; otherwise moves the largest misplaced element to
/// the head and then into place.
FlipPath greedy_sort(const Sequence& s);

}  // namespace pancake
