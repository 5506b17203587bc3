#include "pancake/reduction.hpp"

#include <string>

#include "pancake/error.hpp"

namespace pancake {
namespace {

constexpr Element kVariableWidth = 31;
constexpr Element kClauseWidth = 62;

Element variable_offset(int i) { return kVariableWidth * (i - 1); }
Element clause_offset(const Cnf& cnf, int i) {
  return kVariableWidth * cnf.l + kClauseWidth * (i - 1);
}
Element literal_offset(const Cnf& cnf) { return kVariableWidth * cnf.l + kClauseWidth * cnf.k; }

// Literal indices opened by the variable phase under `asg`.
IndexSet opened_literals(const ReductionInstance& inst, const Assignment& asg) {
  IndexSet open;
  for (int i = 1; i <= inst.cnf.l; ++i) {
    const Variable& v = inst.variables[static_cast<std::size_t>(i - 1)];
    const IndexSet& side = asg.true_vars.contains(i) ? v.positive : v.negative;
    open.insert(side.begin(), side.end());
  }
  return open;
}

const Block& resolved_variable(const ReductionInstance& inst, const Assignment& asg, int i) {
  const Variable& v = inst.variables[static_cast<std::size_t>(i - 1)];
  return asg.true_vars.contains(i) ? v.block_true : v.block_false;
}

void check_assignment(const ReductionInstance& inst, const Assignment& asg) {
  for (int i = 1; i <= inst.cnf.l; ++i) {
    if (asg.true_vars.contains(i) == asg.false_vars.contains(i)) {
      throw Error(Errc::IncompatibleSelection,
                  "assignment does not give variable " + std::to_string(i) + " exactly one value");
    }
  }
}

// Orders two candidate flips so the one leaving fewer misplaced elements
// relative to `target` goes first.
OrderHint closer_to(const Sequence& target) {
  return [&target](std::span<const Element> x, FlipSet& candidates) {
    if (candidates.size() < 2) return;
    auto misplaced_after = [&](std::size_t r) {
      std::size_t count = 0;
      for (std::size_t i = 0; i < r; ++i) count += x[r - 1 - i] != target[i];
      for (std::size_t i = r; i < x.size(); ++i) count += x[i] != target[i];
      return count;
    };
    if (misplaced_after(candidates[1]) < misplaced_after(candidates[0])) {
      std::swap(*candidates.begin(), *(candidates.begin() + 1));
    }
  };
}

}  // namespace

ReductionInstance build_instance(const Cnf& cnf) {
  if (cnf.l < 1 || cnf.k < 1 || static_cast<int>(cnf.clauses.size()) != cnf.k) {
    throw Error(Errc::RangeError, "formula needs l >= 1 variables and k >= 1 clauses");
  }
  ReductionInstance inst;
  inst.cnf = cnf;
  const int m = cnf.literal_count();

  std::vector<IndexSet> positive(static_cast<std::size_t>(cnf.l));
  std::vector<IndexSet> negative(static_cast<std::size_t>(cnf.l));
  for (int i = 1; i <= cnf.k; ++i) {
    for (int s = 0; s < 3; ++s) {
      const Literal& lit = cnf.clauses[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(s)];
      if (lit.var < 1 || lit.var > cnf.l) {
        throw Error(Errc::RangeError, "variable " + std::to_string(lit.var) + " outside 1.." +
                                          std::to_string(cnf.l));
      }
      const int j = 3 * i - 2 + s;
      inst.literal_index.push_back({lit.var, lit.positive, i, static_cast<char>('a' + s)});
      (lit.positive ? positive : negative)[static_cast<std::size_t>(lit.var - 1)].insert(j);
    }
  }

  inst.lits = literals(literal_offset(cnf), m);
  for (int i = 1; i <= cnf.l; ++i) {
    inst.variables.push_back(variable(positive[static_cast<std::size_t>(i - 1)],
                                      negative[static_cast<std::size_t>(i - 1)],
                                      variable_offset(i), inst.lits));
  }
  for (int i = 1; i <= cnf.k; ++i) {
    inst.clauses.push_back(clause(3 * i - 2, 3 * i - 1, 3 * i, clause_offset(cnf, i), inst.lits));
  }

  std::size_t position = 1;
  auto add = [&](const char* role, int index, const char* block, Block elements) {
    Zone z{role, index, block, position, position + elements.size() - 1, std::move(elements)};
    position += z.elements.size();
    inst.layout.push_back(std::move(z));
  };
  for (int i = 1; i <= cnf.l; ++i) {
    add("trigger", i, "nu", {inst.variables[static_cast<std::size_t>(i - 1)].trigger});
  }
  for (int i = 1; i <= cnf.k; ++i) {
    add("trigger", i, "gamma", {inst.clauses[static_cast<std::size_t>(i - 1)].trigger});
  }
  for (int i = 1; i <= cnf.l; ++i) {
    add("variable", i, "V", inst.variables[static_cast<std::size_t>(i - 1)].block);
  }
  for (int i = 1; i <= cnf.k; ++i) {
    add("clause", i, "Gamma", inst.clauses[static_cast<std::size_t>(i - 1)].block);
  }
  for (int i = 1; i <= cnf.l; ++i) {
    add("variable", i, "D", inst.variables[static_cast<std::size_t>(i - 1)].dock.block);
  }
  for (int i = 1; i <= cnf.k; ++i) {
    add("clause", i, "Delta", inst.clauses[static_cast<std::size_t>(i - 1)].docks);
  }
  add("literals", 0, "Lambda", lambda_block(inst.lits, {}, {}));

  Block all;
  for (const Zone& z : inst.layout) all.insert(all.end(), z.elements.begin(), z.elements.end());
  inst.s_phi = Sequence(std::move(all));
  return inst;
}

bool compatible(const ReductionInstance& inst, const Assignment& asg, const Selection& sel) {
  for (int i = 1; i <= inst.cnf.k; ++i) {
    int picked = 0;
    for (int j = 3 * i - 2; j <= 3 * i; ++j) picked += sel.contains(j);
    if (picked != 1) return false;
  }
  for (int j : sel) {
    if (j < 1 || j > inst.cnf.literal_count()) return false;
    const LiteralInfo& info = inst.literal(j);
    if (!asg.satisfies({info.var, info.positive})) return false;
  }
  return true;
}

std::optional<Selection> first_true_selection(const ReductionInstance& inst,
                                              const Assignment& asg) {
  Selection sel;
  for (int i = 1; i <= inst.cnf.k; ++i) {
    bool found = false;
    for (int j = 3 * i - 2; j <= 3 * i && !found; ++j) {
      const LiteralInfo& info = inst.literal(j);
      if (asg.satisfies({info.var, info.positive})) {
        sel.insert(j);
        found = true;
      }
    }
    if (!found) return std::nullopt;
  }
  return sel;
}

Sequence assignment_landmark(const ReductionInstance& inst, const Assignment& asg) {
  check_assignment(inst, asg);
  Block out;
  auto append = [&out](const Block& b) { out.insert(out.end(), b.begin(), b.end()); };
  for (const Clause& c : inst.clauses) out.push_back(c.trigger);
  for (int i = 1; i <= inst.cnf.l; ++i) append(resolved_variable(inst, asg, i));
  for (const Clause& c : inst.clauses) append(c.block);
  for (const Variable& v : inst.variables) append(v.dock.block);
  for (const Clause& c : inst.clauses) append(c.docks);
  append(lambda_block(inst.lits, opened_literals(inst, asg), {}));
  return Sequence(std::move(out));
}

Sequence selection_landmark(const ReductionInstance& inst, const Assignment& asg,
                            const Selection& sel) {
  check_assignment(inst, asg);
  if (!compatible(inst, asg, sel)) {
    throw Error(Errc::IncompatibleSelection, "selection is not compatible with the assignment");
  }
  Block out;
  auto append = [&out](const Block& b) { out.insert(out.end(), b.begin(), b.end()); };
  for (int i = 1; i <= inst.cnf.l; ++i) append(resolved_variable(inst, asg, i));
  for (int i = 1; i <= inst.cnf.k; ++i) {
    const Clause& c = inst.clauses[static_cast<std::size_t>(i - 1)];
    append(sel.contains(c.a) ? c.tested_a : sel.contains(c.b) ? c.tested_b : c.tested_c);
  }
  for (const Variable& v : inst.variables) append(v.dock.block);
  for (const Clause& c : inst.clauses) append(c.docks);
  IndexSet open = opened_literals(inst, asg);
  for (int j : sel) open.erase(j);
  append(lambda_block(inst.lits, open, sel));
  return Sequence(std::move(out));
}

FlipPath certify(const ReductionInstance& inst, const Assignment& asg, const Selection& sel,
                 const SearchLimits& limits) {
  check_assignment(inst, asg);
  if (!compatible(inst, asg, sel)) {
    throw Error(Errc::IncompatibleSelection, "selection is not compatible with the assignment");
  }
  const std::array<std::pair<const char*, Sequence>, 3> stages{{
      {"assignment landmark", assignment_landmark(inst, asg)},
      {"selection landmark", selection_landmark(inst, asg, sel)},
      {"identity", Sequence::identity(inst.n())},
  }};

  FlipPath path{inst.s_phi, {}};
  const Sequence* at = &inst.s_phi;
  for (const auto& [name, target] : stages) {
    const auto leg = find_efficient_path(*at, target, closer_to(target), limits);
    if (!leg) {
      throw Error(Errc::CertificationFailed, std::string("no efficient path reaches the ") + name);
    }
    path.flips.insert(path.flips.end(), leg->flips.begin(), leg->flips.end());
    at = &target;
  }
  if (path.flips.size() != breakpoint_count(inst.s_phi) || !path.is_efficient() ||
      !path.sorts()) {
    throw Error(Errc::CertificationFailed, "assembled certificate does not replay");
  }
  return path;
}

TheoremReport check_theorem(const Cnf& cnf, const SearchLimits& limits,
                            const TheoremLimits& guard) {
  if (cnf.l > guard.max_vars || cnf.k > guard.max_clauses) {
    throw Error(Errc::TooLarge, "theorem check limited to l <= " + std::to_string(guard.max_vars) +
                                    ", k <= " + std::to_string(guard.max_clauses));
  }
  const ReductionInstance inst = build_instance(cnf);
  TheoremReport report;
  const auto assignment = sat_brute_force(cnf);
  report.satisfiable = assignment.has_value();

  Decision decision = decide_efficiently_sortable(inst.s_phi, {}, limits);
  report.stats = decision.stats;
  report.sortable = decision.path.has_value();
  report.path = std::move(decision.path);

  if (report.sortable != report.satisfiable) {
    throw Error(Errc::EquivalenceViolation,
                std::string("stack is ") + (report.sortable ? "" : "not ") +
                    "efficiently sortable but the formula is " +
                    (report.satisfiable ? "satisfiable" : "unsatisfiable"));
  }
  if (report.path && (!report.path->is_efficient() || !report.path->sorts())) {
    throw Error(Errc::EquivalenceViolation, "decider returned a path that does not replay");
  }
  if (assignment) {
    const auto sel = first_true_selection(inst, *assignment);
    if (!sel) throw Error(Errc::EquivalenceViolation, "oracle assignment leaves a clause false");
    report.certificate = certify(inst, *assignment, *sel, limits);
  }
  return report;
}

}  // namespace pancake
