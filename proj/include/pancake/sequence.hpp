#pragma once

// Stacks of pancakes as permutations of 1..n, prefix flips and the
// breakpoint calculus.

#include <array>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <span>
#include <vector>

#include "pancake/kernels.hpp"

namespace pancake {

/// An unvalidated run of elements: a gadget piece or part of a stack.
using Block = std::vector<Element>;

std::size_t hash_elements(std::span<const Element> x) noexcept;

/// Immutable permutation of 1..n (n >= 1).
class Sequence {
 public:
  /// Validates `values`; throws Error(NotAPermutation) on empty input,
  /// duplicates, gaps or non-positive entries.
  explicit Sequence(Block values);
  Sequence(std::initializer_list<Element> values) : Sequence(Block(values)) {}

  static Sequence identity(std::size_t n);

  std::size_t size() const noexcept { return elems_.size(); }
  Element head() const noexcept { return elems_.front(); }
  Element operator[](std::size_t i) const noexcept { return elems_[i]; }
  std::span<const Element> elements() const noexcept { return elems_; }
  const Block& block() const noexcept { return elems_; }
  bool is_identity() const noexcept;

  std::size_t hash() const noexcept;

  friend bool operator==(const Sequence&, const Sequence&) = default;

 private:
  struct Trusted {};
  Sequence(Trusted, Block values) : elems_(std::move(values)) {}
  friend Sequence flip(const Sequence&, std::size_t);

  Block elems_;
};

Sequence make_sequence(std::span<const long long> values);

/// Reverses the first r elements; 1 <= r <= n or Error(OutOfRange).
Sequence flip(const Sequence& s, std::size_t r);

struct BreakpointProfile {
  std::size_t db = 0;
  std::vector<std::size_t> positions;  // 1-based, ascending
};

BreakpointProfile breakpoints(const Sequence& s);
std::size_t breakpoint_count(const Sequence& s);

/// At most two flip lengths; ascending.
class FlipSet {
 public:
  void push(std::size_t r) noexcept;
  std::size_t size() const noexcept { return count_; }
  bool empty() const noexcept { return count_ == 0; }
  const std::size_t* begin() const noexcept { return items_.data(); }
  const std::size_t* end() const noexcept { return items_.data() + count_; }
  std::size_t* begin() noexcept { return items_.data(); }
  std::size_t* end() noexcept { return items_.data() + count_; }
  std::size_t operator[](std::size_t i) const noexcept { return items_[i]; }

 private:
  std::array<std::size_t, 2> items_{};
  std::size_t count_ = 0;
};

/// Lengths r in 2..n whose flip removes exactly one breakpoint. Works on any
/// permutation buffer; the search routines call it on their scratch state.
FlipSet efficient_flips(std::span<const Element> x);
inline FlipSet efficient_flips(const Sequence& s) { return efficient_flips(s.elements()); }

bool is_deadlock(const Sequence& s);

// Element blocks.
Block ident(Element p, Element q);
Block rev_ident(Element p, Element q);
Block shift(Element p, std::span<const Element> block);
Block reversed(std::span<const Element> block);
Block concat(std::initializer_list<std::span<const Element>> parts);

/// A series of flips applied to a source stack.
struct FlipPath {
  Sequence source;
  std::vector<std::size_t> flips;

  Sequence replay() const;
  /// Breakpoint count of the source and after every flip.
  std::vector<std::size_t> db_trace() const;
  bool is_efficient() const;
  bool sorts() const { return replay().is_identity(); }
};

}  // namespace pancake

template <>
struct std::hash<pancake::Sequence> {
  std::size_t operator()(const pancake::Sequence& s) const noexcept { return s.hash(); }
};
