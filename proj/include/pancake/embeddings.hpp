#pragma once

// Concrete stacks on which each gadget behaviour can be checked by
// exhaustive search. Every gadget property has the shape
//   <active parts, X, gadget, Y, ...>  =>  {targets}
// for arbitrary context runs X, Y, Z; an embedding fixes those runs so the
// whole stack is a permutation of 1..n.

#include <cstdint>
#include <random>
#include <span>
#include <string_view>
#include <vector>

#include "pancake/gadgets.hpp"
#include "pancake/sequence.hpp"

namespace pancake {

enum class GadgetKind {
  Dock,
  LockA,
  LockB,
  LockC,
  HookA,
  HookB,
  HookC,
  ForkA,
  ForkB,
  ForkC,
  LiteralsA,
  LiteralsB,
  LiteralsC,
  VariableA,
  VariableB,
  VariableC,
  Clause,
  Clause2A,
  Clause2B,
  Clause2C,
};

std::span<const GadgetKind> all_gadget_kinds() noexcept;
std::string_view to_string(GadgetKind kind) noexcept;
/// Accepts the names printed by to_string ("lock_a", "clause2_c", ...);
/// Error(UnknownKind) otherwise.
GadgetKind parse_gadget_kind(std::string_view name);

struct Embedding {
  GadgetKind kind{};
  Sequence source{1};
  std::vector<Sequence> targets;
  bool deadlock = false;  // the property asserts source is a deadlock
};

/// Gadget parameters. Level-2 kinds place the literal zone right after the
/// gadget zone, with m locks.
struct EmbeddingParams {
  Element p = 0;
  Element q = 0;  // dock only
  int m = 3;
  int literal = 1;  // literals kinds: the lock whose key/test is at the head
  IndexSet open;
  IndexSet tested;
  IndexSet positive;  // variable kinds
  IndexSet negative;
  int a = 1;  // clause kinds
  int b = 2;
  int c = 3;
};

/// Builds the embedding for explicit context runs (X, Y, Z in order; the
/// kinds use one to three of them). Error(NotAPermutation) if the runs do not
/// complete the gadget into a permutation.
Embedding embed(GadgetKind kind, const EmbeddingParams& params, std::span<const Block> context);

/// Fixed parameters and contexts chosen so each target is itself
/// efficiently sortable (or the identity).
Embedding canonical_embedding(GadgetKind kind);

/// Random offsets, lock states and context runs filled with the leftover
/// values plus up to three extra values below and above the gadget.
Embedding random_embedding(GadgetKind kind, std::mt19937_64& rng);

}  // namespace pancake
