#pragma once

// Independent reference implementations, written straight from the
// definitions with plain vectors and no shared code paths with the library.

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <map>
#include <numeric>
#include <queue>
#include <random>
#include <vector>

namespace oracle {

using Perm = std::vector<int>;

inline Perm flipped(Perm x, std::size_t r) {
  std::reverse(x.begin(), x.begin() + static_cast<std::ptrdiff_t>(r));
  return x;
}

inline int breakpoints(const Perm& x) {
  const int n = static_cast<int>(x.size());
  int count = 0;
  for (int r = 0; r + 1 < n; ++r) count += std::abs(x[r] - x[r + 1]) != 1;
  count += x[n - 1] != n;
  return count;
}

inline std::vector<std::size_t> efficient_flips(const Perm& x) {
  std::vector<std::size_t> out;
  const int db = breakpoints(x);
  for (std::size_t r = 2; r <= x.size(); ++r) {
    if (breakpoints(flipped(x, r)) == db - 1) out.push_back(r);
  }
  return out;
}

inline bool sorted(const Perm& x) {
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] != static_cast<int>(i + 1)) return false;
  }
  return true;
}

/// Plain recursion over every efficient flip, no memo.
inline bool efficiently_sortable(const Perm& x) {
  if (sorted(x)) return true;
  for (std::size_t r : efficient_flips(x)) {
    if (efficiently_sortable(flipped(x, r))) return true;
  }
  return false;
}

/// True if some efficient path from x to the identity avoids `avoid`.
inline bool leaks(const Perm& x, const std::vector<Perm>& avoid) {
  if (std::find(avoid.begin(), avoid.end(), x) != avoid.end()) return false;
  if (sorted(x)) return true;
  for (std::size_t r : efficient_flips(x)) {
    if (leaks(flipped(x, r), avoid)) return true;
  }
  return false;
}

/// Sorting distance of every permutation of 1..n by BFS over a map.
inline std::map<Perm, int> distances(int n) {
  Perm id(static_cast<std::size_t>(n));
  std::iota(id.begin(), id.end(), 1);
  std::map<Perm, int> dist{{id, 0}};
  std::queue<Perm> q;
  q.push(id);
  while (!q.empty()) {
    const Perm x = q.front();
    q.pop();
    for (std::size_t r = 2; r <= x.size(); ++r) {
      Perm y = flipped(x, r);
      if (dist.emplace(y, dist[x] + 1).second) q.push(std::move(y));
    }
  }
  return dist;
}

/// Calls f on every permutation of 1..n in lexicographic order.
inline void for_each_permutation(int n, const std::function<void(const Perm&)>& f) {
  Perm x(static_cast<std::size_t>(n));
  std::iota(x.begin(), x.end(), 1);
  do {
    f(x);
  } while (std::next_permutation(x.begin(), x.end()));
}

inline Perm random_permutation(int n, std::mt19937_64& rng) {
  Perm x(static_cast<std::size_t>(n));
  std::iota(x.begin(), x.end(), 1);
  std::shuffle(x.begin(), x.end(), rng);
  return x;
}

/// Satisfiability of clauses over signed variable indices by enumeration.
inline bool satisfiable(int l, const std::vector<std::vector<int>>& clauses) {
  for (int mask = 0; mask < (1 << l); ++mask) {
    bool ok = true;
    for (const auto& c : clauses) {
      bool any = false;
      for (int lit : c) {
        const bool value = (mask >> (std::abs(lit) - 1)) & 1;
        any = any || (lit > 0 ? value : !value);
      }
      ok = ok && any;
    }
    if (ok) return true;
  }
  return false;
}

}  // namespace oracle
