#pragma once

// 3-CNF formulas: DIMACS parsing and a brute-force satisfiability oracle.

#include <array>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace pancake {

struct Literal {
  int var = 0;  // 1-based
  bool positive = true;

  friend bool operator==(const Literal&, const Literal&) = default;
};

struct Cnf {
  int l = 0;  // variables
  int k = 0;  // clauses
  std::vector<std::array<Literal, 3>> clauses;

  int literal_count() const { return 3 * k; }
};

/// DIMACS with exactly three literals per clause. Repeated and complementary
/// literals inside a clause are accepted. Throws Error(SyntaxError),
/// Error(ArityError) or Error(RangeError).
Cnf parse_dimacs(std::string_view text);
std::string to_dimacs(const Cnf& cnf);

/// Partition of 1..l into true and false variables.
struct Assignment {
  std::set<int> true_vars;
  std::set<int> false_vars;

  bool satisfies(const Literal& lit) const {
    return lit.positive ? true_vars.contains(lit.var) : false_vars.contains(lit.var);
  }
};

bool satisfies(const Cnf& cnf, const Assignment& asg);

/// First satisfying assignment in lexicographic order of (x1, ..., xl) with
/// false < true, or nothing. Error(TooLarge) when l > 24.
std::optional<Assignment> sat_brute_force(const Cnf& cnf);

}  // namespace pancake
