#include "pancake/search.hpp"

#include <algorithm>
#include <chrono>
#include <limits>
#include <string>
#include <unordered_set>

#include "pancake/error.hpp"

namespace pancake {
namespace {

struct BlockHash {
  std::size_t operator()(const Block& b) const noexcept { return hash_elements(b); }
};
using StateSet = std::unordered_set<Block, BlockHash>;

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

// Depth-first walk along efficient flips from a scratch copy of the source.
// Each step removes one breakpoint, so the depth never exceeds db(source).
// A state is a goal when its breakpoint count reaches goal_db and it equals
// the goal (the identity when no goal is given). States in `absorbing` end a
// branch without success. Failed states are memoized; that is sound because
// the outcome depends on the state alone.
class EfficientDfs {
 public:
  EfficientDfs(const Sequence& source, const SearchLimits& limits, const OrderHint& hint)
      : state_(source.block()), limits_(limits), hint_(hint) {}

  void set_goal(const Sequence* goal, std::size_t goal_db) {
    goal_ = goal;
    goal_db_ = goal_db;
  }
  void set_absorbing(const StateSet* absorbing) { absorbing_ = absorbing; }

  bool run() {
    const std::size_t db = kernels::count_breakpoints(state_.data(), state_.size());
    if (db < goal_db_) return false;
    root_db_ = db;
    return visit(db);
  }

  const std::vector<std::size_t>& flips() const { return flips_; }
  std::size_t nodes() const { return nodes_; }
  std::size_t max_depth() const { return max_depth_; }

 private:
  bool matches_goal() const {
    if (goal_ == nullptr) return true;  // db == 0 is the identity
    return std::equal(state_.begin(), state_.end(), goal_->elements().begin());
  }

  bool visit(std::size_t db) {
    if (++nodes_ > limits_.node_budget) {
      throw Error(Errc::TooLarge,
                  "node budget of " + std::to_string(limits_.node_budget) + " exhausted");
    }
    const std::size_t depth = root_db_ - db;
    max_depth_ = std::max(max_depth_, depth);
    if (absorbing_ != nullptr && absorbing_->contains(state_)) return false;
    if (db == goal_db_) return matches_goal();
    if (failed_.contains(state_)) return false;

    FlipSet candidates = efficient_flips(state_);
    if (hint_) hint_(state_, candidates);
    for (std::size_t r : candidates) {
      kernels::reverse_prefix(state_.data(), r);
      flips_.push_back(r);
      if (visit(db - 1)) return true;
      flips_.pop_back();
      kernels::reverse_prefix(state_.data(), r);
    }
    failed_.insert(state_);
    return false;
  }

  Block state_;
  const SearchLimits& limits_;
  const OrderHint& hint_;
  const Sequence* goal_ = nullptr;
  std::size_t goal_db_ = 0;
  const StateSet* absorbing_ = nullptr;
  StateSet failed_;
  std::vector<std::size_t> flips_;
  std::size_t root_db_ = 0;
  std::size_t nodes_ = 0;
  std::size_t max_depth_ = 0;
};

}  // namespace

Decision decide_efficiently_sortable(const Sequence& s, const OrderHint& hint,
                                     const SearchLimits& limits) {
  Stopwatch clock;
  EfficientDfs dfs(s, limits, hint);
  Decision out;
  if (dfs.run()) out.path = FlipPath{s, dfs.flips()};
  out.stats = {dfs.nodes(), dfs.max_depth(), clock.seconds()};
  return out;
}

std::optional<FlipPath> find_efficient_path(const Sequence& from, const Sequence& to,
                                            const OrderHint& hint, const SearchLimits& limits,
                                            SearchStats* stats) {
  Stopwatch clock;
  std::optional<FlipPath> out;
  if (from.size() == to.size()) {
    EfficientDfs dfs(from, limits, hint);
    dfs.set_goal(&to, breakpoint_count(to));
    if (dfs.run()) out = FlipPath{from, dfs.flips()};
    if (stats != nullptr) *stats = {dfs.nodes(), dfs.max_depth(), clock.seconds()};
  } else if (stats != nullptr) {
    *stats = {};
  }
  return out;
}

FunnelReport verify_funnel(const Sequence& s, std::span<const Sequence> targets,
                           const SearchLimits& limits) {
  if (s.is_identity()) throw Error(Errc::SIsIdentity, "funnel source is the identity");
  FunnelReport report;

  // Targets are ordinary states when checking that each one is reachable.
  for (const Sequence& t : targets) {
    SearchStats stats;
    if (!find_efficient_path(s, t, {}, limits, &stats)) report.unreachable_targets.push_back(t);
    report.states_explored += stats.nodes_expanded;
  }

  // Targets absorb when looking for an efficient path around them.
  const bool identity_is_target =
      std::any_of(targets.begin(), targets.end(), [](const Sequence& t) { return t.is_identity(); });
  if (!identity_is_target) {
    StateSet absorbing;
    for (const Sequence& t : targets) {
      if (t.size() == s.size()) absorbing.insert(t.block());
    }
    const OrderHint no_hint;
    EfficientDfs dfs(s, limits, no_hint);
    dfs.set_absorbing(&absorbing);
    if (dfs.run()) report.leaking_path = FlipPath{s, dfs.flips()};
    report.states_explored += dfs.nodes();
  }

  report.holds = report.unreachable_targets.empty() && !report.leaking_path.has_value();
  return report;
}

namespace {

class IdaStar {
 public:
  IdaStar(const Sequence& s, const SearchLimits& limits) : state_(s.block()), limits_(limits) {}

  std::vector<std::size_t> solve() {
    const std::size_t n = state_.size();
    std::size_t bound = kernels::count_breakpoints(state_.data(), n);
    while (true) {
      const std::size_t next = visit(0, bound, 0);
      if (next == kFound) return path_;
      bound = next;
    }
  }

  std::size_t nodes() const { return nodes_; }
  std::size_t max_depth() const { return max_depth_; }

 private:
  static constexpr std::size_t kFound = std::numeric_limits<std::size_t>::max();

  static bool is_break(Element a, Element b) { return a - b != 1 && b - a != 1; }

  // Change in breakpoint count caused by flipping the first r elements.
  int delta(std::size_t r) const {
    const std::size_t n = state_.size();
    const Element head = state_[0];
    if (r == n) {
      const auto top = static_cast<Element>(n);
      return static_cast<int>(head != top) - static_cast<int>(state_[n - 1] != top);
    }
    return static_cast<int>(is_break(head, state_[r])) -
           static_cast<int>(is_break(state_[r - 1], state_[r]));
  }

  // Returns kFound, or the smallest f-value above `bound` seen.
  std::size_t visit(std::size_t g, std::size_t bound, std::size_t previous) {
    if (++nodes_ > limits_.node_budget) {
      throw Error(Errc::TooLarge,
                  "node budget of " + std::to_string(limits_.node_budget) + " exhausted");
    }
    max_depth_ = std::max(max_depth_, g);
    const std::size_t n = state_.size();
    const std::size_t h = kernels::count_breakpoints(state_.data(), n);
    if (g + h > bound) return g + h;
    if (h == 0) return kFound;

    // Breakpoint-removing flips first, then neutral ones, then the rest.
    std::vector<std::pair<int, std::size_t>> moves;
    moves.reserve(n);
    for (std::size_t r = 2; r <= n; ++r) {
      if (r != previous) moves.emplace_back(delta(r), r);
    }
    std::sort(moves.begin(), moves.end());

    std::size_t best = std::numeric_limits<std::size_t>::max() - 1;
    for (const auto& [d, r] : moves) {
      const auto child_f = static_cast<std::size_t>(static_cast<long long>(g + 1 + h) + d);
      if (child_f > bound) {
        best = std::min(best, child_f);
        continue;
      }
      kernels::reverse_prefix(state_.data(), r);
      path_.push_back(r);
      const std::size_t t = visit(g + 1, bound, r);
      if (t == kFound) return kFound;
      best = std::min(best, t);
      path_.pop_back();
      kernels::reverse_prefix(state_.data(), r);
    }
    return best;
  }

  Block state_;
  const SearchLimits& limits_;
  std::vector<std::size_t> path_;
  std::size_t nodes_ = 0;
  std::size_t max_depth_ = 0;
};

}  // namespace

DistanceResult exact_distance(const Sequence& s, const SearchLimits& limits) {
  if (s.size() > limits.max_exact_n) {
    throw Error(Errc::TooLarge, "exact distance limited to n <= " +
                                    std::to_string(limits.max_exact_n) + ", got n = " +
                                    std::to_string(s.size()));
  }
  Stopwatch clock;
  IdaStar search(s, limits);
  auto flips = search.solve();
  DistanceResult out{flips.size(), FlipPath{s, std::move(flips)}, {}};
  out.stats = {search.nodes(), search.max_depth(), clock.seconds()};
  return out;
}

FlipPath greedy_sort(const Sequence& s) {
  FlipPath path{s, {}};
  Block x = s.block();
  const std::size_t n = x.size();
  auto apply = [&](std::size_t r) {
    kernels::reverse_prefix(x.data(), r);
    path.flips.push_back(r);
  };
  while (true) {
    // Among efficient flips, skip one that lands in a deadlock if the other
    // does not; otherwise the shorter one.
    const FlipSet efficient = efficient_flips(x);
    if (!efficient.empty()) {
      std::size_t pick = efficient[0];
      if (efficient.size() == 2) {
        kernels::reverse_prefix(x.data(), pick);
        const bool stuck = efficient_flips(x).empty() &&
                           kernels::count_breakpoints(x.data(), n) != 0;
        kernels::reverse_prefix(x.data(), pick);
        if (stuck) pick = efficient[1];
      }
      apply(pick);
      continue;
    }
    std::size_t largest = n;
    while (largest > 0 && x[largest - 1] == static_cast<Element>(largest)) --largest;
    if (largest == 0) break;
    const std::size_t at = kernels::index_of(x.data(), n, static_cast<Element>(largest)) + 1;
    if (at != 1) apply(at);
    apply(largest);
  }
  return path;
}

}  // namespace pancake
