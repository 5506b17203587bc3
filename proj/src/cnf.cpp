#include "pancake/cnf.hpp"

#include <cctype>
#include <charconv>
#include <cstdint>
#include <sstream>

#include "pancake/error.hpp"

namespace pancake {
namespace {

constexpr int kMaxBruteForceVars = 24;

long long parse_int(std::string_view token, std::size_t line) {
  long long value = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size()) {
    throw Error(Errc::SyntaxError,
                "line " + std::to_string(line) + ": bad integer '" + std::string(token) + "'");
  }
  return value;
}

std::vector<std::string_view> tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    const std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

}  // namespace

Cnf parse_dimacs(std::string_view text) {
  Cnf cnf;
  bool have_header = false;
  std::vector<Literal> pending;
  std::size_t line_no = 0;

  while (!text.empty()) {
    const std::size_t eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    ++line_no;

    const auto toks = tokens(line);
    if (toks.empty() || toks[0] == "c" || toks[0].front() == 'c') continue;
    if (toks[0] == "%") break;  // end marker used by some benchmark sets
    if (toks[0] == "p") {
      if (have_header || toks.size() != 4 || toks[1] != "cnf") {
        throw Error(Errc::SyntaxError, "line " + std::to_string(line_no) + ": bad header");
      }
      const long long l = parse_int(toks[2], line_no);
      const long long k = parse_int(toks[3], line_no);
      if (l < 0 || k < 0 || l > 1'000'000 || k > 1'000'000) {
        throw Error(Errc::SyntaxError, "line " + std::to_string(line_no) + ": bad header counts");
      }
      cnf.l = static_cast<int>(l);
      cnf.k = static_cast<int>(k);
      have_header = true;
      continue;
    }
    if (!have_header) {
      throw Error(Errc::SyntaxError,
                  "line " + std::to_string(line_no) + ": clause before 'p cnf' header");
    }
    for (std::string_view tok : toks) {
      const long long v = parse_int(tok, line_no);
      if (v == 0) {
        if (pending.size() != 3) {
          throw Error(Errc::ArityError, "clause " + std::to_string(cnf.clauses.size() + 1) +
                                            " has " + std::to_string(pending.size()) +
                                            " literals, expected 3");
        }
        cnf.clauses.push_back({pending[0], pending[1], pending[2]});
        pending.clear();
        continue;
      }
      const long long var = v < 0 ? -v : v;
      if (var > cnf.l) {
        throw Error(Errc::RangeError, "variable " + std::to_string(var) + " outside 1.." +
                                          std::to_string(cnf.l));
      }
      pending.push_back({static_cast<int>(var), v > 0});
    }
  }
  if (!have_header) throw Error(Errc::SyntaxError, "missing 'p cnf' header");
  if (!pending.empty()) {
    throw Error(Errc::ArityError, "last clause is not terminated by 0");
  }
  if (static_cast<int>(cnf.clauses.size()) != cnf.k) {
    throw Error(Errc::SyntaxError, "header announces " + std::to_string(cnf.k) +
                                       " clauses, found " + std::to_string(cnf.clauses.size()));
  }
  return cnf;
}

std::string to_dimacs(const Cnf& cnf) {
  std::ostringstream out;
  out << "p cnf " << cnf.l << ' ' << cnf.k << '\n';
  for (const auto& clause : cnf.clauses) {
    for (const Literal& lit : clause) out << (lit.positive ? lit.var : -lit.var) << ' ';
    out << "0\n";
  }
  return out.str();
}

bool satisfies(const Cnf& cnf, const Assignment& asg) {
  for (const auto& clause : cnf.clauses) {
    bool any = false;
    for (const Literal& lit : clause) any = any || asg.satisfies(lit);
    if (!any) return false;
  }
  return true;
}

std::optional<Assignment> sat_brute_force(const Cnf& cnf) {
  if (cnf.l > kMaxBruteForceVars) {
    throw Error(Errc::TooLarge, "brute-force SAT limited to " +
                                    std::to_string(kMaxBruteForceVars) + " variables");
  }
  const int l = cnf.l;
  // Bit l-i holds x_i, so counting upward walks assignments in lex order.
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << l); ++bits) {
    bool all = true;
    for (const auto& clause : cnf.clauses) {
      bool any = false;
      for (const Literal& lit : clause) {
        const bool value = (bits >> (l - lit.var)) & 1u;
        any = any || value == lit.positive;
      }
      if (!any) {
        all = false;
        break;
      }
    }
    if (all) {
      Assignment asg;
      for (int i = 1; i <= l; ++i) {
        ((bits >> (l - i)) & 1u ? asg.true_vars : asg.false_vars).insert(i);
      }
      return asg;
    }
  }
  return std::nullopt;
}

}  // namespace pancake
