#pragma once

// The 3-SAT to efficient-sortability reduction: the stack built from a
// formula, its landmarks after the variable and clause phases, certificates
// and the brute-force equivalence check.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "pancake/cnf.hpp"
#include "pancake/gadgets.hpp"
#include "pancake/search.hpp"
#include "pancake/sequence.hpp"

namespace pancake {

/// One contiguous run of the stack. Positions are 1-based and inclusive.
struct Zone {
  std::string role;   // variable, clause, literals or trigger
  int index = 0;      // 1-based gadget index; 0 for the literal zone
  std::string block;  // nu, gamma, V, Gamma, D, Delta or Lambda
  std::size_t start = 0;
  std::size_t end = 0;
  Block elements;
};

/// Literal occurrence j (1-based): clause i owns 3i-2, 3i-1, 3i as a, b, c.
struct LiteralInfo {
  int var = 0;
  bool positive = true;
  int clause = 0;
  char slot = 'a';
};

struct ReductionInstance {
  Cnf cnf;
  Sequence s_phi{1};
  std::vector<Zone> layout;
  std::vector<LiteralInfo> literal_index;  // entry j-1 describes literal j

  Literals lits;
  std::vector<Variable> variables;
  std::vector<Clause> clauses;

  std::size_t n() const { return s_phi.size(); }
  const LiteralInfo& literal(int j) const {
    return literal_index.at(static_cast<std::size_t>(j - 1));
  }
};

ReductionInstance build_instance(const Cnf& cnf);

/// One literal index per clause.
using Selection = IndexSet;

/// Every clause has exactly one selected literal and each selected literal
/// is true under `asg`.
bool compatible(const ReductionInstance& inst, const Assignment& asg, const Selection& sel);

/// The first true literal of every clause, if each clause has one.
std::optional<Selection> first_true_selection(const ReductionInstance& inst,
                                              const Assignment& asg);

/// The stack once every variable gadget has been resolved according to asg.
Sequence assignment_landmark(const ReductionInstance& inst, const Assignment& asg);
/// The stack once every clause has additionally tested its selected literal.
Sequence selection_landmark(const ReductionInstance& inst, const Assignment& asg,
                            const Selection& sel);

/// An efficient sorting path through both landmarks. Throws
/// Error(IncompatibleSelection) or Error(CertificationFailed).
FlipPath certify(const ReductionInstance& inst, const Assignment& asg, const Selection& sel,
                 const SearchLimits& limits = {});

struct TheoremLimits {
  int max_vars = 4;
  int max_clauses = 3;
};

struct TheoremReport {
  bool sortable = false;
  bool satisfiable = false;
  std::optional<FlipPath> path;         // from the unguided decider
  std::optional<FlipPath> certificate;  // from certify, on satisfiable input
  SearchStats stats;
};

/// Decides the stack without guidance and compares with brute-force SAT.
/// Throws Error(EquivalenceViolation) on disagreement and Error(TooLarge)
/// outside the guards or past the node budget.
TheoremReport check_theorem(const Cnf& cnf, const SearchLimits& limits = {},
                            const TheoremLimits& guard = {});

}  // namespace pancake
