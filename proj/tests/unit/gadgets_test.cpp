#include <algorithm>

#include "doctest.h"
#include "pancake/error.hpp"
#include "pancake/gadgets.hpp"

using namespace pancake;

namespace {

Block sorted(Block b) {
  std::sort(b.begin(), b.end());
  return b;
}

template <class F>
Errc error_code(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return Errc::NotAPermutation;
}

}  // namespace

TEST_SUITE("gadgets") {
  TEST_CASE("level-1 blocks") {
    CHECK(dock(2, 5).block == Block{1, 2, 6, 7});
    CHECK(error_code([] { dock(5, 5); }) == Errc::BadOffsets);

    const Lock l = lock(0);
    CHECK(l.key == 10);
    CHECK(l.test == 7);
    CHECK(l.closed == Block{1, 2, 9, 8, 5, 6, 4, 3, 11, 12});
    CHECK(l.open == Block{1, 2, 3, 4, 6, 5, 8, 9, 10, 11, 12});
    CHECK(std::find(l.closed.begin(), l.closed.end(), l.key) == l.closed.end());
    CHECK(std::find(l.open.begin(), l.open.end(), l.test) == l.open.end());

    const Hook h = hook(0);
    CHECK(h.take == 10);
    CHECK(h.put == 7);
    CHECK(sorted(concat({h.g, h.h, Block{h.take, h.put}})) == ident(1, 12));
    CHECK(sorted(concat({h.g_taken, h.h_taken, Block{7}})) == ident(1, 12));
    CHECK(sorted(concat({h.g_put, h.h_put})) == ident(1, 12));

    const Fork f = fork(0);
    CHECK(f.e == Block{11, 8, 7, 3});
    CHECK(f.f.size() == 11);
    CHECK(f.f_in_order.size() == 15);
    CHECK(f.f_reversed.size() == 15);
    CHECK(sorted(f.f_in_order) == ident(1, 15));
    CHECK(sorted(f.f_reversed) == ident(1, 15));
  }

  TEST_CASE("literal zone") {
    const Literals lits = literals(0, 3);
    CHECK(lits.key(2) == 22);
    CHECK(lits.test(3) == 31);
    CHECK(lambda_block(lits, {}, {1, 2, 3}) == ident(1, 36));
    CHECK(lambda_block(lits, {}, {}) ==
          concat({lits.locks[0].closed, lits.locks[1].closed, lits.locks[2].closed}));
    CHECK(lambda_block(literals(0, 1), {1}, {}) == Block{1, 2, 3, 4, 6, 5, 8, 9, 10, 11, 12});
    CHECK(error_code([&] { lambda_block(lits, {1}, {1}); }) == Errc::OverlappingSets);
    CHECK(error_code([&] { lambda_block(lits, {4}, {}); }) == Errc::RangeError);
  }

  TEST_CASE("variable gadget") {
    const Literals lits = literals(31, 3);
    const Variable v = variable({1}, {2}, 0, lits);
    CHECK(v.block.size() == 28);
    CHECK(v.block_true.size() == 28);
    CHECK(v.trigger == 12);  // take of hook(p + 2)
    CHECK(v.dock.block == Block{1, 2, 30, 31});
    CHECK(variable({}, {}, 0, lits).block.size() == 26);
    CHECK(error_code([&] { variable({1}, {1}, 0, lits); }) == Errc::OverlappingSets);

    // Consumed keys account for the difference between the forms.
    const Variable w = variable({1, 3}, {2}, 0, lits);
    const Block before = sorted(concat({w.block, Block{w.trigger}}));
    CHECK(sorted(concat({w.block_true, Block{lits.key(1), lits.key(3)}})) == before);
    CHECK(sorted(concat({w.block_false, Block{lits.key(2)}})) == before);
  }

  TEST_CASE("clause gadget") {
    const Literals lits = literals(62, 3);
    const Clause c = clause(1, 2, 3, 0, lits);
    CHECK(c.block.size() == 56);
    CHECK(c.trigger == 31);
    CHECK(c.docks == Block{1, 2, 18, 19, 20, 21, 61, 62});
    CHECK(c.docks == concat({dock(2, 17).block, dock(21, 60).block}));
    CHECK(error_code([&] { clause(1, 1, 2, 0, lits); }) == Errc::DuplicateIndices);
    CHECK(error_code([&] { clause(1, 2, 4, 0, lits); }) == Errc::RangeError);

    const Block before = sorted(concat({c.block, Block{c.trigger}}));
    CHECK(sorted(concat({c.tested_a, Block{lits.test(1)}})) == before);
    CHECK(sorted(concat({c.tested_b, Block{lits.test(2)}})) == before);
    CHECK(sorted(concat({c.tested_c, Block{lits.test(3)}})) == before);
  }

  TEST_CASE("shifting the offset shifts every block") {
    for (Element p : {0, 5, 100}) {
      CHECK(lock(p).closed == shift(p, lock(0).closed));
      CHECK(lock(p).open == shift(p, lock(0).open));
      CHECK(hook(p).h_put == shift(p, hook(0).h_put));
      CHECK(fork(p).f_reversed == shift(p, fork(0).f_reversed));
      CHECK(dock(p + 2, p + 9).block == shift(p, dock(2, 9).block));

      const Variable v0 = variable({1}, {3}, 0, literals(31, 3));
      const Variable vp = variable({1}, {3}, p, literals(31 + p, 3));
      CHECK(vp.block == shift(p, v0.block));
      CHECK(vp.block_false == shift(p, v0.block_false));

      const Clause c0 = clause(3, 1, 2, 0, literals(62, 3));
      const Clause cp = clause(3, 1, 2, p, literals(62 + p, 3));
      CHECK(cp.block == shift(p, c0.block));
      CHECK(cp.tested_c == shift(p, c0.tested_c));
    }
  }
}
