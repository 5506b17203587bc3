#include "pancake/sequence.hpp"

#include <algorithm>
#include <cassert>
#include <limits>
#include <string>

#include "pancake/error.hpp"

namespace pancake {

std::size_t hash_elements(std::span<const Element> x) noexcept {
  // 64-bit FNV-1a over whole elements, finished with a murmur mix.
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (Element e : x) {
    h ^= static_cast<std::uint32_t>(e);
    h *= 0x100000001b3ULL;
  }
  h ^= h >> 33;
  h *= 0xff51afd7ed558ccdULL;
  h ^= h >> 33;
  return static_cast<std::size_t>(h);
}

Sequence::Sequence(Block values) : elems_(std::move(values)) {
  const std::size_t n = elems_.size();
  if (n == 0) throw Error(Errc::NotAPermutation, "empty sequence");
  std::vector<bool> seen(n + 1, false);
  for (Element e : elems_) {
    if (e < 1 || static_cast<std::size_t>(e) > n) {
      throw Error(Errc::NotAPermutation,
                  "element " + std::to_string(e) + " outside 1.." + std::to_string(n));
    }
    if (seen[static_cast<std::size_t>(e)]) {
      throw Error(Errc::NotAPermutation, "duplicate element " + std::to_string(e));
    }
    seen[static_cast<std::size_t>(e)] = true;
  }
}

Sequence Sequence::identity(std::size_t n) {
  return Sequence(ident(1, static_cast<Element>(n)));
}

bool Sequence::is_identity() const noexcept {
  for (std::size_t i = 0; i < elems_.size(); ++i) {
    if (elems_[i] != static_cast<Element>(i + 1)) return false;
  }
  return true;
}

std::size_t Sequence::hash() const noexcept { return hash_elements(elems_); }

Sequence make_sequence(std::span<const long long> values) {
  Block b;
  b.reserve(values.size());
  for (long long v : values) {
    if (v < 1 || v > std::numeric_limits<Element>::max()) {
      throw Error(Errc::NotAPermutation, "element " + std::to_string(v) + " is not a valid label");
    }
    b.push_back(static_cast<Element>(v));
  }
  return Sequence(std::move(b));
}

Sequence flip(const Sequence& s, std::size_t r) {
  if (r < 1 || r > s.size()) {
    throw Error(Errc::OutOfRange,
                "flip length " + std::to_string(r) + " outside 1.." + std::to_string(s.size()));
  }
  Block out = s.elems_;
  kernels::reverse_prefix(out.data(), r);
  return Sequence(Sequence::Trusted{}, std::move(out));
}

BreakpointProfile breakpoints(const Sequence& s) {
  BreakpointProfile profile;
  const auto x = s.elements();
  const std::size_t n = x.size();
  for (std::size_t r = 1; r < n; ++r) {
    const Element d = x[r - 1] - x[r];
    if (d != 1 && d != -1) profile.positions.push_back(r);
  }
  if (x[n - 1] != static_cast<Element>(n)) profile.positions.push_back(n);
  profile.db = profile.positions.size();
  return profile;
}

std::size_t breakpoint_count(const Sequence& s) {
  return kernels::count_breakpoints(s.elements().data(), s.size());
}

void FlipSet::push(std::size_t r) noexcept {
  assert(count_ < items_.size());
  items_[count_++] = r;
  if (count_ == 2 && items_[0] > items_[1]) std::swap(items_[0], items_[1]);
}

FlipSet efficient_flips(std::span<const Element> x) {
  FlipSet out;
  const std::size_t n = x.size();
  if (n < 2) return out;
  const Element head = x[0];
  // A flip of length r only rewires the pair (x[r-1], x[r]) into
  // (head, x[r]); it is efficient iff that pair was a breakpoint and x[r]
  // is a value neighbour of the head.
  for (const Element v : {head - 1, head + 1}) {
    if (v < 1 || static_cast<std::size_t>(v) > n) continue;
    const std::size_t r = kernels::index_of(x.data(), n, v);
    if (r == kernels::npos || r < 2) continue;
    const Element d = x[r - 1] - x[r];
    if (d != 1 && d != -1) out.push(r);
  }
  if (static_cast<std::size_t>(head) == n && x[n - 1] != static_cast<Element>(n)) out.push(n);

#ifndef NDEBUG
  const std::size_t db = kernels::scalar_table().count_breakpoints(x.data(), n);
  for (std::size_t r : out) {
    Block probe(x.begin(), x.end());
    std::reverse(probe.begin(), probe.begin() + static_cast<std::ptrdiff_t>(r));
    assert(kernels::scalar_table().count_breakpoints(probe.data(), n) + 1 == db);
  }
#endif
  return out;
}

bool is_deadlock(const Sequence& s) { return !s.is_identity() && efficient_flips(s).empty(); }

Block ident(Element p, Element q) {
  Block b;
  for (Element v = p; v <= q; ++v) b.push_back(v);
  return b;
}

Block rev_ident(Element p, Element q) {
  Block b;
  for (Element v = q; v >= p; --v) b.push_back(v);
  return b;
}

Block shift(Element p, std::span<const Element> block) {
  Block b(block.begin(), block.end());
  for (Element& v : b) v += p;
  return b;
}

Block reversed(std::span<const Element> block) { return Block(block.rbegin(), block.rend()); }

Block concat(std::initializer_list<std::span<const Element>> parts) {
  Block b;
  for (auto part : parts) b.insert(b.end(), part.begin(), part.end());
  return b;
}

Sequence FlipPath::replay() const {
  Sequence s = source;
  for (std::size_t r : flips) s = flip(s, r);
  return s;
}

std::vector<std::size_t> FlipPath::db_trace() const {
  std::vector<std::size_t> trace{breakpoint_count(source)};
  Sequence s = source;
  for (std::size_t r : flips) {
    s = flip(s, r);
    trace.push_back(breakpoint_count(s));
  }
  return trace;
}

bool FlipPath::is_efficient() const {
  const auto trace = db_trace();
  for (std::size_t i = 1; i < trace.size(); ++i) {
    if (trace[i] + 1 != trace[i - 1]) return false;
  }
  return true;
}

}  // namespace pancake
