#include <algorithm>
#include <random>

#include "doctest.h"
#include "pancake/error.hpp"
#include "pancake/embeddings.hpp"
#include "pancake/search.hpp"

using namespace pancake;

namespace {

bool property_holds(const Embedding& e) {
  if (e.deadlock) return is_deadlock(e.source);
  return verify_funnel(e.source, e.targets).holds;
}

}  // namespace

TEST_SUITE("embeddings") {
  TEST_CASE("documented embeddings") {
    const Embedding d = canonical_embedding(GadgetKind::Dock);
    CHECK(d.source == Sequence{5, 4, 3, 9, 8, 1, 2, 6, 7, 10});
    REQUIRE(d.targets.size() == 1);
    CHECK(d.targets[0] == Sequence{9, 8, 1, 2, 3, 4, 5, 6, 7, 10});

    const Embedding a = canonical_embedding(GadgetKind::LockA);
    CHECK(a.source == Sequence{10, 7, 1, 2, 9, 8, 5, 6, 4, 3, 11, 12, 13});
    REQUIRE(a.targets.size() == 1);
    CHECK(a.targets[0] == Sequence{7, 1, 2, 3, 4, 6, 5, 8, 9, 10, 11, 12, 13});

    const Embedding c = canonical_embedding(GadgetKind::LockC);
    CHECK(c.source == Sequence{7, 13, 1, 2, 9, 8, 5, 6, 4, 3, 11, 12, 10});
    CHECK(c.deadlock);
    CHECK(c.targets.empty());
  }

  TEST_CASE("names round-trip") {
    CHECK(all_gadget_kinds().size() == 20);
    for (GadgetKind k : all_gadget_kinds()) CHECK(parse_gadget_kind(to_string(k)) == k);
    CHECK_THROWS_AS(parse_gadget_kind("lock_d"), Error);
  }

  TEST_CASE("every canonical embedding satisfies its property") {
    for (GadgetKind k : all_gadget_kinds()) {
      CAPTURE(to_string(k));
      const Embedding e = canonical_embedding(k);
      CHECK(property_holds(e));
    }
  }

  TEST_CASE("canonical targets are efficiently sortable") {
    // Otherwise the second funnel condition would hold vacuously.
    for (GadgetKind k : all_gadget_kinds()) {
      CAPTURE(to_string(k));
      const Embedding e = canonical_embedding(k);
      CHECK((e.deadlock || !e.targets.empty()));
      for (const Sequence& t : e.targets) {
        CHECK(decide_efficiently_sortable(t).path.has_value());
      }
    }
  }

  TEST_CASE("random contexts") {
    std::mt19937_64 rng(2024);
    for (GadgetKind k : all_gadget_kinds()) {
      CAPTURE(to_string(k));
      for (int i = 0; i < 20; ++i) CHECK(property_holds(random_embedding(k, rng)));
    }
  }

  TEST_CASE("funnels compose through chained gadget properties") {
    const std::pair<GadgetKind, std::array<GadgetKind, 2>> chains[] = {
        {GadgetKind::ForkA, {GadgetKind::ForkB, GadgetKind::ForkC}},
        {GadgetKind::VariableA, {GadgetKind::VariableB, GadgetKind::VariableC}},
    };
    for (const auto& [first, next] : chains) {
      CAPTURE(to_string(first));
      const Embedding head = canonical_embedding(first);
      REQUIRE(head.targets.size() == 2);
      std::vector<Sequence> combined;
      for (std::size_t i = 0; i < 2; ++i) {
        const Embedding step = canonical_embedding(next[i]);
        REQUIRE(step.source == head.targets[i]);
        REQUIRE(verify_funnel(step.source, step.targets).holds);
        for (const Sequence& t : step.targets) {
          if (std::find(combined.begin(), combined.end(), t) == combined.end()) combined.push_back(t);
        }
      }
      CHECK(verify_funnel(head.source, combined).holds);
    }
  }

  TEST_CASE("explicit contexts must complete a permutation") {
    const EmbeddingParams p;
    const std::vector<Block> ok{{7}, {13}};
    CHECK(embed(GadgetKind::LockA, p, ok).source.size() == 13);
    const std::vector<Block> gap{{7}, {14}};
    CHECK_THROWS_AS(embed(GadgetKind::LockA, p, gap), Error);
    const std::vector<Block> wrong_arity{{7}};
    CHECK_THROWS_AS(embed(GadgetKind::LockA, p, wrong_arity), Error);
  }
}
