#include "cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <random>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "pancake/diameter.hpp"
#include "pancake/embeddings.hpp"
#include "pancake/error.hpp"
#include "pancake/formats.hpp"
#include "pancake/reduction.hpp"
#include "pancake/search.hpp"

namespace pancake::cli {
namespace {

constexpr int kExitBudget = 3;

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_stream(std::istream& in) {
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot read " + path);
  return read_stream(f);
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f || !(f << text)) throw IoError("cannot write " + path);
}

// "-" is stdin, an existing path is read, anything else is the text itself.
std::string argument_text(const std::string& arg, std::istream& in) {
  if (arg == "-") return read_stream(in);
  std::error_code ec;
  if (std::filesystem::is_regular_file(arg, ec)) return read_file(arg);
  return arg;
}

Sequence read_permutation(const std::string& arg, std::istream& in) {
  const auto all = parse_permutations(argument_text(arg, in));
  if (all.size() != 1) {
    throw Error(Errc::NotAPermutation,
                "expected one permutation, got " + std::to_string(all.size()));
  }
  return all.front();
}

std::string join(const std::vector<std::size_t>& xs) {
  std::string out;
  for (std::size_t x : xs) {
    if (!out.empty()) out += ' ';
    out += std::to_string(x);
  }
  return out;
}

bool is_input_error(Errc code) {
  switch (code) {
    case Errc::NotAPermutation:
    case Errc::SyntaxError:
    case Errc::ArityError:
    case Errc::RangeError:
    case Errc::UnknownKind:
    case Errc::OutOfRange:
    case Errc::SIsIdentity:
      return true;
    default:
      return false;
  }
}

struct Options {
  SearchLimits limits;
  TheoremLimits theorem;

  std::string perm;
  std::string cnf_path;
  std::string out_path;
  std::string layout_path;
  std::string trace_path;
  bool exact = false;
  bool greedy = false;
  bool json = false;
  std::uint64_t seed = 1;
  int random_contexts = 20;
  std::vector<std::string> kinds;
  std::size_t diameter_n = 0;
};

int cmd_sort(const Options& o, std::istream& in, std::ostream& out) {
  const Sequence s = read_permutation(o.perm, in);
  const bool exact = o.exact || (!o.greedy && s.size() <= o.limits.max_exact_n);
  FlipPath path{s, {}};
  SearchStats stats;
  if (exact) {
    DistanceResult r = exact_distance(s, o.limits);
    path = std::move(r.witness);
    stats = r.stats;
  } else {
    path = greedy_sort(s);
  }
  if (o.json) {
    out << trace_json(path, stats);
  } else {
    out << (exact ? "distance " : "length ") << path.flips.size() << '\n';
    out << "flips " << join(path.flips) << '\n';
  }
  return 0;
}

int cmd_decide(const Options& o, std::istream& in, std::ostream& out) {
  const Sequence s = read_permutation(o.perm, in);
  const Decision d = decide_efficiently_sortable(s, {}, o.limits);
  if (!d.path) {
    out << "not efficiently sortable\n";
    return 1;
  }
  out << "efficiently sortable in " << d.path->flips.size() << " flips\n";
  out << "flips " << join(d.path->flips) << '\n';
  if (!o.trace_path.empty()) write_file(o.trace_path, trace_json(*d.path, d.stats));
  return 0;
}

int cmd_reduce(const Options& o, std::istream& in, std::ostream& out) {
  const Cnf cnf = parse_dimacs(argument_text(o.cnf_path, in));
  const ReductionInstance inst = build_instance(cnf);
  const std::string perm = format_permutation(inst.s_phi);
  if (o.out_path.empty()) {
    out << perm;
  } else {
    write_file(o.out_path, perm);
  }
  if (!o.layout_path.empty()) write_file(o.layout_path, layout_json(inst));
  return 0;
}

int cmd_check_theorem(const Options& o, std::istream& in, std::ostream& out) {
  const Cnf cnf = parse_dimacs(argument_text(o.cnf_path, in));
  const TheoremReport r = check_theorem(cnf, o.limits, o.theorem);
  out << "sortable " << (r.sortable ? "true" : "false") << '\n';
  out << "satisfiable " << (r.satisfiable ? "true" : "false") << '\n';
  if (r.certificate) out << "certificate " << r.certificate->flips.size() << " flips\n";
  out << "equivalence holds\n";
  return 0;
}

// Checks one embedding; returns an empty string on success.
std::string check_embedding(const Embedding& e, const SearchLimits& limits,
                            std::size_t& states) {
  if (e.deadlock) {
    states += 1;
    return is_deadlock(e.source) ? "" : "source is not a deadlock";
  }
  const FunnelReport r = verify_funnel(e.source, e.targets, limits);
  states += r.states_explored;
  if (!r.unreachable_targets.empty()) {
    return "target unreachable: " + format_permutation(r.unreachable_targets.front());
  }
  if (r.leaking_path) return "efficient path avoids every target";
  return "";
}

int cmd_verify_gadgets(const Options& o, std::ostream& out) {
  std::vector<GadgetKind> kinds;
  for (const auto& name : o.kinds) kinds.push_back(parse_gadget_kind(name));
  if (kinds.empty()) kinds.assign(all_gadget_kinds().begin(), all_gadget_kinds().end());

  bool all_ok = true;
  for (GadgetKind kind : kinds) {
    // Each kind draws from its own stream so selecting kinds does not
    // change the contexts of the others.
    std::mt19937_64 rng(o.seed * 1000 + static_cast<std::uint64_t>(kind));
    std::size_t states = 0;
    std::string failure = check_embedding(canonical_embedding(kind), o.limits, states);
    for (int i = 0; failure.empty() && i < o.random_contexts; ++i) {
      const Embedding e = random_embedding(kind, rng);
      failure = check_embedding(e, o.limits, states);
      if (!failure.empty()) {
        std::string s = format_permutation(e.source);
        s.pop_back();
        failure += " (source " + s + ")";
      }
    }
    if (failure.empty()) {
      out << to_string(kind) << " OK " << states << '\n';
    } else {
      if (failure.back() == '\n') failure.pop_back();
      out << to_string(kind) << " FAIL " << failure << '\n';
      all_ok = false;
    }
  }
  return all_ok ? 0 : 1;
}

int cmd_diameter(const Options& o, std::ostream& out) {
  out << "f(" << o.diameter_n << ") = " << diameter(o.diameter_n, o.limits) << '\n';
  return 0;
}

}  // namespace

int run(int argc, const char* const* argv, std::istream& in, std::ostream& out,
        std::ostream& err) {
  Options o;
  if (const char* env = std::getenv("PANCAKE_NODE_BUDGET")) {
    try {
      o.limits.node_budget = std::stoull(env);
    } catch (const std::exception&) {
      err << "PANCAKE_NODE_BUDGET must be a positive integer\n";
      return kExitUsage;
    }
  }

  CLI::App app{"Pancake flipping: efficient sorting, gadgets and the 3-SAT reduction"};
  app.require_subcommand(1);
  app.add_option("--node-budget", o.limits.node_budget, "Search node budget")
      ->check(CLI::PositiveNumber);

  auto* sort = app.add_subcommand("sort", "Sort a permutation");
  sort->add_option("perm", o.perm, "Permutation, file or - for stdin")->required();
  auto* exact = sort->add_flag("--exact", o.exact, "Minimum number of flips (IDA*)");
  sort->add_flag("--greedy", o.greedy, "Greedy heuristic")->excludes(exact);
  sort->add_flag("--json", o.json, "Print the trace as JSON");
  sort->add_option("--max-exact-n", o.limits.max_exact_n, "Size guard for --exact")
      ->check(CLI::PositiveNumber);

  auto* decide = app.add_subcommand("decide", "Decide efficient sortability");
  decide->add_option("perm", o.perm, "Permutation, file or - for stdin")->required();
  decide->add_option("--trace", o.trace_path, "Write the path as JSON");

  auto* reduce = app.add_subcommand("reduce", "Build the stack for a 3-CNF formula");
  reduce->add_option("cnf", o.cnf_path, "DIMACS file or - for stdin")->required();
  reduce->add_option("--out", o.out_path, "Write the permutation here instead of stdout");
  reduce->add_option("--layout", o.layout_path, "Write the zone layout as JSON");

  auto* theorem = app.add_subcommand("check-theorem",
                                     "Compare efficient sortability with satisfiability");
  theorem->add_option("cnf", o.cnf_path, "DIMACS file or - for stdin")->required();
  theorem->add_option("--max-vars", o.theorem.max_vars, "Variable guard")
      ->check(CLI::PositiveNumber);
  theorem->add_option("--max-clauses", o.theorem.max_clauses, "Clause guard")
      ->check(CLI::PositiveNumber);

  auto* gadgets = app.add_subcommand("verify-gadgets", "Machine-check every gadget property");
  gadgets->add_option("--seed", o.seed, "Seed for the random contexts");
  gadgets->add_option("--random", o.random_contexts, "Random contexts per kind")
      ->check(CLI::NonNegativeNumber);
  gadgets->add_option("--kind", o.kinds, "Restrict to these kinds");

  auto* diam = app.add_subcommand("diameter", "Pancake network diameter f(n) by BFS");
  diam->add_option("n", o.diameter_n, "Stack size")->required();
  diam->add_option("--max-n", o.limits.max_diameter_n, "Size guard")
      ->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*sort) return cmd_sort(o, in, out);
    if (*decide) return cmd_decide(o, in, out);
    if (*reduce) return cmd_reduce(o, in, out);
    if (*theorem) return cmd_check_theorem(o, in, out);
    if (*gadgets) return cmd_verify_gadgets(o, out);
    if (*diam) return cmd_diameter(o, out);
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    if (e.code() == Errc::TooLarge) return kExitBudget;
    if (e.code() == Errc::EquivalenceViolation || e.code() == Errc::CertificationFailed) return 2;
    return is_input_error(e.code()) ? kExitUsage : 1;
  }
  return kExitUsage;
}

}  // namespace pancake::cli
