#pragma once

// Building blocks of the 3-SAT reduction. Level-1 gadgets (dock, lock, hook,
// fork) are fixed integer patterns shifted by an offset; level-2 gadgets
// (literals, variable, clause) are assembled from them. Every block is a
// plain element list; concatenating blocks into a Sequence is left to the
// caller.

#include <set>
#include <vector>

#include "pancake/sequence.hpp"

namespace pancake {

using IndexSet = std::set<int>;

/// Parks the run rev(p+1..q) away from the head. Block is <p-1, p, q+1, q+2>.
struct Dock {
  Element p = 0;
  Element q = 0;
  Block block;
};

/// Closed lock, its key (p+10) and its test element (p+7). A key at the head
/// opens the lock; a test at the head is a deadlock unless the lock is open.
struct Lock {
  Element p = 0;
  Element key = 0;
  Element test = 0;
  Block closed;
  Block open;
};

/// Two delimiters G and H around a stored run. `take` (p+10) pulls the run
/// to the head, `put` (p+7) stores it back.
struct Hook {
  Element p = 0;
  Element take = 0;
  Element put = 0;
  Block g;
  Block h;
  Block g_taken;  // delimiters after the run was taken
  Block h_taken;
  Block g_put;  // delimiters after the run was put back
  Block h_put;
};

/// A binary choice: the run enclosed by E and F reaches the head either in
/// order (F becomes `f_in_order`) or reversed (F becomes `f_reversed`).
struct Fork {
  Element p = 0;
  Block e;
  Block f;
  Block f_in_order;
  Block f_reversed;
};

Dock dock(Element p, Element q);
Lock lock(Element p);
Hook hook(Element p);
Fork fork(Element p);

/// One lock per literal occurrence, literal i (1-based) at offset p+12(i-1).
struct Literals {
  Element p = 0;
  int m = 0;
  std::vector<Lock> locks;

  Element key(int i) const { return locks.at(static_cast<std::size_t>(i - 1)).key; }
  Element test(int i) const { return locks.at(static_cast<std::size_t>(i - 1)).test; }
};

Literals literals(Element p, int m);

/// The literal zone with locks in `open` opened, locks in `tested` replaced
/// by their sorted run and the rest closed. Error(OverlappingSets) when the
/// sets intersect, Error(RangeError) for indices outside 1..m.
Block lambda_block(const Literals& lits, const IndexSet& open, const IndexSet& tested);

/// Boolean variable occupying values p+1..p+31, holding the keys of its
/// positive (`positive`) and negative (`negative`) occurrences.
struct Variable {
  IndexSet positive;
  IndexSet negative;
  Element p = 0;
  Element trigger = 0;
  Block block;
  Block block_true;   // after the positive keys were used
  Block block_false;  // after the negative keys were used
  Dock dock;
};

Variable variable(const IndexSet& positive, const IndexSet& negative, Element p,
                  const Literals& lits);

/// Clause over literals a, b, c occupying values p+1..p+62 plus the three
/// test elements it carries.
struct Clause {
  int a = 0;
  int b = 0;
  int c = 0;
  Element p = 0;
  Element trigger = 0;
  Block block;
  Block tested_a;  // after literal a was tested
  Block tested_b;
  Block tested_c;
  Block docks;
};

Clause clause(int a, int b, int c, Element p, const Literals& lits);

}  // namespace pancake
