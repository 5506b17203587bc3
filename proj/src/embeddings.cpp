#include "pancake/embeddings.hpp"

#include <algorithm>
#include <array>
#include <string>

#include "pancake/error.hpp"

namespace pancake {
namespace {

constexpr std::array kKinds{
    GadgetKind::Dock,      GadgetKind::LockA,     GadgetKind::LockB,     GadgetKind::LockC,
    GadgetKind::HookA,     GadgetKind::HookB,     GadgetKind::HookC,     GadgetKind::ForkA,
    GadgetKind::ForkB,     GadgetKind::ForkC,     GadgetKind::LiteralsA, GadgetKind::LiteralsB,
    GadgetKind::LiteralsC, GadgetKind::VariableA, GadgetKind::VariableB, GadgetKind::VariableC,
    GadgetKind::Clause,    GadgetKind::Clause2A,  GadgetKind::Clause2B,  GadgetKind::Clause2C,
};

constexpr std::array<std::string_view, kKinds.size()> kNames{
    "dock",       "lock_a",     "lock_b",     "lock_c",     "hook_a",
    "hook_b",     "hook_c",     "fork_a",     "fork_b",     "fork_c",
    "literals_a", "literals_b", "literals_c", "variable_a", "variable_b",
    "variable_c", "clause",     "clause2_a",  "clause2_b",  "clause2_c",
};

// One piece of a stack pattern: fixed gadget elements or a context run,
// possibly reversed.
struct Part {
  enum class Kind { Fixed, Context, ReversedContext } kind;
  Block fixed;
  std::size_t slot = 0;
};

Part fixed(Block b) { return {Part::Kind::Fixed, std::move(b), 0}; }
Part fixed(Element e) { return {Part::Kind::Fixed, Block{e}, 0}; }
Part ctx(std::size_t slot) { return {Part::Kind::Context, {}, slot}; }
Part rev_ctx(std::size_t slot) { return {Part::Kind::ReversedContext, {}, slot}; }

struct Pattern {
  std::vector<Part> source;
  std::vector<std::vector<Part>> targets;
  bool deadlock = false;
  std::size_t slots = 0;
  Element top = 0;  // largest gadget value
};

IndexSet with(IndexSet s, int i) {
  s.insert(i);
  return s;
}
IndexSet without(IndexSet s, std::initializer_list<int> items) {
  for (int i : items) s.erase(i);
  return s;
}
IndexSet united(IndexSet s, const IndexSet& other) {
  s.insert(other.begin(), other.end());
  return s;
}

Pattern pattern_for(GadgetKind kind, const EmbeddingParams& ps) {
  const Element p = ps.p;
  Pattern pt;
  switch (kind) {
    case GadgetKind::Dock: {
      const Dock d = dock(p, ps.q);
      pt.source = {fixed(rev_ident(p + 1, ps.q)), ctx(0), fixed(d.block), ctx(1)};
      pt.targets = {{ctx(0), fixed(ident(p - 1, ps.q + 2)), ctx(1)}};
      pt.slots = 2;
      pt.top = ps.q + 2;
      break;
    }
    case GadgetKind::LockA:
    case GadgetKind::LockB:
    case GadgetKind::LockC: {
      const Lock l = lock(p);
      pt.slots = 2;
      pt.top = p + 12;
      if (kind == GadgetKind::LockA) {
        pt.source = {fixed(l.key), ctx(0), fixed(l.closed), ctx(1)};
        pt.targets = {{ctx(0), fixed(l.open), ctx(1)}};
      } else if (kind == GadgetKind::LockB) {
        pt.source = {fixed(l.test), ctx(0), fixed(l.open), ctx(1)};
        pt.targets = {{ctx(0), fixed(ident(p + 1, p + 12)), ctx(1)}};
      } else {
        pt.source = {fixed(l.test), ctx(0), fixed(l.closed), ctx(1)};
        pt.deadlock = true;
      }
      break;
    }
    case GadgetKind::HookA:
    case GadgetKind::HookB:
    case GadgetKind::HookC: {
      const Hook h = hook(p);
      pt.top = p + 12;
      if (kind == GadgetKind::HookA) {
        pt.source = {fixed(h.take), ctx(0), fixed(h.g), ctx(1), fixed(h.h), ctx(2)};
        pt.targets = {{ctx(1), fixed(h.g_taken), rev_ctx(0), fixed(h.h_taken), ctx(2)}};
        pt.slots = 3;
      } else if (kind == GadgetKind::HookB) {
        pt.source = {fixed(h.put), ctx(0), fixed(h.g_taken), rev_ctx(1), fixed(h.h_taken), ctx(2)};
        pt.targets = {{ctx(1), fixed(h.g_put), ctx(0), fixed(h.h_put), ctx(2)}};
        pt.slots = 3;
      } else {
        pt.source = {fixed(h.g_put), ctx(0), fixed(h.h_put), ctx(1)};
        pt.targets = {{ctx(0), fixed(rev_ident(p + 1, p + 12)), ctx(1)}};
        pt.slots = 2;
      }
      break;
    }
    case GadgetKind::ForkA:
    case GadgetKind::ForkB:
    case GadgetKind::ForkC: {
      const Fork f = fork(p);
      pt.top = p + 15;
      if (kind == GadgetKind::ForkA) {
        pt.source = {fixed(f.e), ctx(0), fixed(f.f), ctx(1)};
        pt.targets = {{ctx(0), fixed(f.f_in_order), ctx(1)},
                      {rev_ctx(0), fixed(f.f_reversed), ctx(1)}};
        pt.slots = 2;
      } else {
        pt.source = {fixed(kind == GadgetKind::ForkB ? f.f_in_order : f.f_reversed), ctx(0)};
        pt.targets = {{fixed(rev_ident(p + 1, p + 15)), ctx(0)}};
        pt.slots = 1;
      }
      break;
    }
    case GadgetKind::LiteralsA:
    case GadgetKind::LiteralsB:
    case GadgetKind::LiteralsC: {
      const Literals lits = literals(p, ps.m);
      const int i = ps.literal;
      const Block zone = lambda_block(lits, ps.open, ps.tested);
      pt.slots = 1;
      pt.top = p + 12 * ps.m;
      if (kind == GadgetKind::LiteralsA) {
        pt.source = {fixed(lits.key(i)), ctx(0), fixed(zone)};
        pt.targets = {{ctx(0), fixed(lambda_block(lits, with(ps.open, i), ps.tested))}};
      } else if (kind == GadgetKind::LiteralsB) {
        pt.source = {fixed(lits.test(i)), ctx(0), fixed(zone)};
        pt.targets = {{ctx(0), fixed(lambda_block(lits, without(ps.open, {i}), with(ps.tested, i)))}};
      } else {
        pt.source = {fixed(lits.test(i)), ctx(0), fixed(zone)};
        pt.deadlock = true;
      }
      break;
    }
    case GadgetKind::VariableA:
    case GadgetKind::VariableB:
    case GadgetKind::VariableC: {
      const Literals lits = literals(p + 31, ps.m);
      const Variable v = variable(ps.positive, ps.negative, p, lits);
      const Block zone = lambda_block(lits, ps.open, ps.tested);
      pt.slots = 2;
      pt.top = p + 31 + 12 * ps.m;
      if (kind == GadgetKind::VariableA) {
        pt.source = {fixed(v.trigger), ctx(0), fixed(v.block), ctx(1), fixed(zone)};
        pt.targets = {
            {ctx(0), fixed(v.block_true), ctx(1),
             fixed(lambda_block(lits, united(ps.open, ps.positive), ps.tested))},
            {ctx(0), fixed(v.block_false), ctx(1),
             fixed(lambda_block(lits, united(ps.open, ps.negative), ps.tested))},
        };
      } else {
        const bool took_true = kind == GadgetKind::VariableB;
        pt.source = {fixed(took_true ? v.block_true : v.block_false), ctx(0), fixed(v.dock.block),
                     ctx(1), fixed(zone)};
        const IndexSet opened = united(ps.open, took_true ? ps.negative : ps.positive);
        pt.targets = {{ctx(0), fixed(ident(p + 1, p + 31)), ctx(1),
                       fixed(lambda_block(lits, opened, ps.tested))}};
      }
      break;
    }
    case GadgetKind::Clause:
    case GadgetKind::Clause2A:
    case GadgetKind::Clause2B:
    case GadgetKind::Clause2C: {
      const Literals lits = literals(p + 62, ps.m);
      const Clause cl = clause(ps.a, ps.b, ps.c, p, lits);
      const Block zone = lambda_block(lits, ps.open, ps.tested);
      pt.slots = 2;
      pt.top = p + 62 + 12 * ps.m;
      auto tested_zone = [&](std::initializer_list<int> idx) {
        IndexSet t = ps.tested;
        t.insert(idx.begin(), idx.end());
        return fixed(lambda_block(lits, without(ps.open, idx), t));
      };
      if (kind == GadgetKind::Clause) {
        pt.source = {fixed(cl.trigger), ctx(0), fixed(cl.block), ctx(1), fixed(zone)};
        const std::array<std::pair<int, const Block*>, 3> picks{
            {{ps.a, &cl.tested_a}, {ps.b, &cl.tested_b}, {ps.c, &cl.tested_c}}};
        for (const auto& [literal, block] : picks) {
          if (ps.open.contains(literal)) {
            pt.targets.push_back({ctx(0), fixed(*block), ctx(1), tested_zone({literal})});
          }
        }
      } else {
        const Block* picked = kind == GadgetKind::Clause2A   ? &cl.tested_a
                              : kind == GadgetKind::Clause2B ? &cl.tested_b
                                                             : &cl.tested_c;
        const std::pair<int, int> rest = kind == GadgetKind::Clause2A   ? std::pair{ps.b, ps.c}
                                         : kind == GadgetKind::Clause2B ? std::pair{ps.a, ps.c}
                                                                        : std::pair{ps.a, ps.b};
        pt.source = {fixed(*picked), ctx(0), fixed(cl.docks), ctx(1), fixed(zone)};
        pt.targets = {{ctx(0), fixed(ident(p + 1, p + 62)), ctx(1),
                       tested_zone({rest.first, rest.second})}};
      }
      break;
    }
  }
  return pt;
}

Block render(const std::vector<Part>& parts, std::span<const Block> context) {
  Block out;
  for (const Part& part : parts) {
    switch (part.kind) {
      case Part::Kind::Fixed:
        out.insert(out.end(), part.fixed.begin(), part.fixed.end());
        break;
      case Part::Kind::Context:
        out.insert(out.end(), context[part.slot].begin(), context[part.slot].end());
        break;
      case Part::Kind::ReversedContext:
        out.insert(out.end(), context[part.slot].rbegin(), context[part.slot].rend());
        break;
    }
  }
  return out;
}

Embedding realize(GadgetKind kind, const Pattern& pt, std::span<const Block> context) {
  if (context.size() != pt.slots) {
    throw Error(Errc::NotAPermutation, std::string(to_string(kind)) + " takes " +
                                           std::to_string(pt.slots) + " context runs, got " +
                                           std::to_string(context.size()));
  }
  Embedding e;
  e.kind = kind;
  e.source = Sequence(render(pt.source, context));
  for (const auto& t : pt.targets) e.targets.emplace_back(render(t, context));
  e.deadlock = pt.deadlock;
  return e;
}

EmbeddingParams canonical_params(GadgetKind kind) {
  EmbeddingParams ps;
  switch (kind) {
    case GadgetKind::Dock:
      ps.p = 2;
      ps.q = 5;
      break;
    case GadgetKind::LiteralsA:
    case GadgetKind::LiteralsC:
      ps.literal = 1;
      ps.open = {2};
      ps.tested = {3};
      break;
    case GadgetKind::LiteralsB:
      ps.literal = 2;
      ps.open = {1, 2};
      ps.tested = {3};
      break;
    case GadgetKind::VariableA:
      ps.positive = {1};
      ps.negative = {2};
      ps.tested = {3};
      break;
    case GadgetKind::VariableB:
      ps.positive = {1};
      ps.negative = {2};
      ps.open = {1};
      ps.tested = {3};
      break;
    case GadgetKind::VariableC:
      ps.positive = {1};
      ps.negative = {2};
      ps.open = {2};
      ps.tested = {3};
      break;
    case GadgetKind::Clause:
      ps.open = {1, 2, 3};
      break;
    case GadgetKind::Clause2A:
      ps.open = {2, 3};
      ps.tested = {1};
      break;
    case GadgetKind::Clause2B:
      ps.open = {1, 3};
      ps.tested = {2};
      break;
    case GadgetKind::Clause2C:
      ps.open = {1, 2};
      ps.tested = {3};
      break;
    default:
      break;
  }
  return ps;
}

std::vector<Block> canonical_context(GadgetKind kind) {
  switch (kind) {
    case GadgetKind::Dock: return {{9, 8}, {10}};
    case GadgetKind::LockA: return {{7}, {13}};
    case GadgetKind::LockB: return {{13}, {}};
    case GadgetKind::LockC: return {{13}, {10}};
    case GadgetKind::HookA: return {{}, {7, 13}, {}};
    case GadgetKind::HookB: return {{13}, {}, {}};
    case GadgetKind::HookC: return {{13}, {14}};
    case GadgetKind::ForkA: return {{}, {16}};
    case GadgetKind::ForkB:
    case GadgetKind::ForkC: return {{16}};
    // Literal zone at 0: tests are 7, 19, 31 and keys 10, 22, 34.
    case GadgetKind::LiteralsA: return {{7, 19}};
    case GadgetKind::LiteralsB: return {{7}};
    case GadgetKind::LiteralsC: return {{10, 19}};
    // Literal zone at 31: tests 38, 50; the dock is <1, 2, 30, 31>.
    case GadgetKind::VariableA: return {{}, {38, 50, 1, 2, 30, 31}};
    case GadgetKind::VariableB:
    case GadgetKind::VariableC: return {{38, 50}, {}};
    // Clause docks are <1, 2, 18, 19> and <20, 21, 61, 62>.
    case GadgetKind::Clause: return {{}, clause(1, 2, 3, 0, literals(62, 3)).docks};
    case GadgetKind::Clause2A:
    case GadgetKind::Clause2B:
    case GadgetKind::Clause2C: return {{}, {}};
  }
  return {};
}

IndexSet random_subset(const std::vector<int>& pool, std::mt19937_64& rng) {
  IndexSet s;
  std::bernoulli_distribution coin(0.5);
  for (int i : pool) {
    if (coin(rng)) s.insert(i);
  }
  return s;
}

// Assigns each index of `pool` to closed, open or tested uniformly.
void random_lock_states(const std::vector<int>& pool, EmbeddingParams& ps, std::mt19937_64& rng,
                        bool allow_tested = true) {
  std::uniform_int_distribution<int> state(0, allow_tested ? 2 : 1);
  for (int i : pool) {
    const int s = state(rng);
    if (s == 1) ps.open.insert(i);
    if (s == 2) ps.tested.insert(i);
  }
}

std::vector<int> indices(int m, std::initializer_list<int> excluded = {}) {
  std::vector<int> out;
  for (int i = 1; i <= m; ++i) {
    if (std::find(excluded.begin(), excluded.end(), i) == excluded.end()) out.push_back(i);
  }
  return out;
}

EmbeddingParams random_params(GadgetKind kind, Element low, std::mt19937_64& rng) {
  auto uniform = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  EmbeddingParams ps;
  ps.p = low;
  switch (kind) {
    case GadgetKind::Dock:
      ps.p = low + 2;
      ps.q = ps.p + uniform(1, 5);
      break;
    case GadgetKind::LiteralsA:
    case GadgetKind::LiteralsB:
    case GadgetKind::LiteralsC: {
      ps.m = uniform(1, 4);
      ps.literal = uniform(1, ps.m);
      const std::vector<int> others = indices(ps.m, {ps.literal});
      random_lock_states(others, ps, rng);
      if (kind == GadgetKind::LiteralsB) ps.open.insert(ps.literal);
      break;
    }
    case GadgetKind::VariableA:
    case GadgetKind::VariableB:
    case GadgetKind::VariableC: {
      ps.m = uniform(1, 4);
      for (int i = 1; i <= ps.m; ++i) {
        const int role = uniform(0, 2);
        if (role == 1) ps.positive.insert(i);
        if (role == 2) ps.negative.insert(i);
      }
      std::vector<int> free_locks;
      for (int i = 1; i <= ps.m; ++i) {
        const bool pos = ps.positive.contains(i);
        const bool neg = ps.negative.contains(i);
        if (kind == GadgetKind::VariableA && (pos || neg)) continue;
        if (kind == GadgetKind::VariableB && neg) continue;
        if (kind == GadgetKind::VariableC && pos) continue;
        free_locks.push_back(i);
      }
      random_lock_states(free_locks, ps, rng);
      break;
    }
    case GadgetKind::Clause:
    case GadgetKind::Clause2A:
    case GadgetKind::Clause2B:
    case GadgetKind::Clause2C: {
      ps.m = uniform(3, 5);
      std::vector<int> all = indices(ps.m);
      std::shuffle(all.begin(), all.end(), rng);
      ps.a = all[0];
      ps.b = all[1];
      ps.c = all[2];
      random_lock_states(indices(ps.m, {ps.a, ps.b, ps.c}), ps, rng);
      if (kind == GadgetKind::Clause) {
        ps.open = united(ps.open, random_subset({ps.a, ps.b, ps.c}, rng));
      } else {
        const int picked = kind == GadgetKind::Clause2A   ? ps.a
                           : kind == GadgetKind::Clause2B ? ps.b
                                                          : ps.c;
        for (int i : {ps.a, ps.b, ps.c}) {
          if (i != picked) ps.open.insert(i);
        }
        random_lock_states({picked}, ps, rng);
      }
      break;
    }
    default:
      break;
  }
  return ps;
}

}  // namespace

std::span<const GadgetKind> all_gadget_kinds() noexcept { return kKinds; }

std::string_view to_string(GadgetKind kind) noexcept {
  return kNames[static_cast<std::size_t>(kind)];
}

GadgetKind parse_gadget_kind(std::string_view name) {
  for (std::size_t i = 0; i < kNames.size(); ++i) {
    if (kNames[i] == name) return kKinds[i];
  }
  throw Error(Errc::UnknownKind, "unknown gadget property '" + std::string(name) + "'");
}

Embedding embed(GadgetKind kind, const EmbeddingParams& params, std::span<const Block> context) {
  return realize(kind, pattern_for(kind, params), context);
}

Embedding canonical_embedding(GadgetKind kind) {
  const auto context = canonical_context(kind);
  return embed(kind, canonical_params(kind), context);
}

Embedding random_embedding(GadgetKind kind, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> extra(0, 3);
  const Element low = extra(rng);
  const Element high = extra(rng);
  const EmbeddingParams ps = random_params(kind, low, rng);
  const Pattern pt = pattern_for(kind, ps);

  // Whatever the gadget parts leave out of 1..n goes into the context runs.
  const Element n = pt.top + high;
  std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
  auto mark = [&](const std::vector<Part>& parts) {
    for (const Part& part : parts) {
      for (Element v : part.fixed) used[static_cast<std::size_t>(v)] = true;
    }
  };
  mark(pt.source);
  Block leftover;
  for (Element v = 1; v <= n; ++v) {
    if (!used[static_cast<std::size_t>(v)]) leftover.push_back(v);
  }
  std::shuffle(leftover.begin(), leftover.end(), rng);
  std::vector<Block> context(pt.slots);
  std::uniform_int_distribution<std::size_t> slot(0, pt.slots - 1);
  for (Element v : leftover) context[slot(rng)].push_back(v);
  return realize(kind, pt, context);
}

}  // namespace pancake
