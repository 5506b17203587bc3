#include "pancake/gadgets.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "pancake/error.hpp"

namespace pancake {
namespace {

// Construction-time self check: `values` must be exactly lo..hi.
void expect_interval(Block values, Element lo, Element hi, const char* what) {
  std::sort(values.begin(), values.end());
  if (values != ident(lo, hi)) {
    throw std::logic_error(std::string(what) + " does not cover its value range");
  }
}

Block without(const Block& values, const Block& removed) {
  Block out;
  for (Element v : values) {
    if (std::find(removed.begin(), removed.end(), v) == removed.end()) out.push_back(v);
  }
  return out;
}

void check_indices(const Literals& lits, const IndexSet& s) {
  for (int i : s) {
    if (i < 1 || i > lits.m) {
      throw Error(Errc::RangeError,
                  "literal index " + std::to_string(i) + " outside 1.." + std::to_string(lits.m));
    }
  }
}

bool intersects(const IndexSet& x, const IndexSet& y) {
  return std::any_of(x.begin(), x.end(), [&](int i) { return y.contains(i); });
}

}  // namespace

Dock dock(Element p, Element q) {
  if (p >= q) {
    throw Error(Errc::BadOffsets,
                "dock needs p < q, got p = " + std::to_string(p) + ", q = " + std::to_string(q));
  }
  return Dock{p, q, {p - 1, p, q + 1, q + 2}};
}

Lock lock(Element p) {
  Lock l;
  l.p = p;
  l.key = p + 10;
  l.test = p + 7;
  l.closed = shift(p, Block{1, 2, 9, 8, 5, 6, 4, 3, 11, 12});
  l.open = shift(p, Block{1, 2, 3, 4, 6, 5, 8, 9, 10, 11, 12});
  expect_interval(concat({l.closed, Block{l.key, l.test}}), p + 1, p + 12, "lock");
  return l;
}

Hook hook(Element p) {
  Hook h;
  h.p = p;
  h.take = p + 10;
  h.put = p + 7;
  h.g = shift(p, Block{3, 4});
  h.h = shift(p, Block{12, 11, 6, 5, 9, 8, 2, 1});
  h.g_taken = shift(p, Block{12, 11, 6, 5, 4, 3});
  h.h_taken = shift(p, Block{10, 9, 8, 2, 1});
  h.g_put = shift(p, Block{3, 4, 5, 6, 7});
  h.h_put = shift(p, Block{12, 11, 10, 9, 8, 2, 1});
  expect_interval(concat({h.g, h.h, Block{h.take, h.put}}), p + 1, p + 12, "hook");
  return h;
}

Fork fork(Element p) {
  Fork f;
  f.p = p;
  f.e = shift(p, Block{11, 8, 7, 3});
  f.f = shift(p, Block{10, 9, 6, 12, 13, 4, 5, 15, 14, 2, 1});
  f.f_in_order = shift(p, Block{10, 9, 6, 7, 8, 11, 12, 13, 14, 15, 5, 4, 3, 2, 1});
  f.f_reversed = shift(p, Block{3, 7, 8, 11, 10, 9, 6, 12, 13, 4, 5, 15, 14, 2, 1});
  expect_interval(concat({f.e, f.f}), p + 1, p + 15, "fork");
  return f;
}

Literals literals(Element p, int m) {
  Literals lits;
  lits.p = p;
  lits.m = m;
  for (int i = 1; i <= m; ++i) lits.locks.push_back(lock(p + 12 * (i - 1)));
  return lits;
}

Block lambda_block(const Literals& lits, const IndexSet& open, const IndexSet& tested) {
  check_indices(lits, open);
  check_indices(lits, tested);
  if (intersects(open, tested)) {
    throw Error(Errc::OverlappingSets, "open and tested literal sets intersect");
  }
  Block out;
  out.reserve(static_cast<std::size_t>(12 * lits.m));
  for (int i = 1; i <= lits.m; ++i) {
    const Lock& l = lits.locks[static_cast<std::size_t>(i - 1)];
    if (open.contains(i)) {
      out.insert(out.end(), l.open.begin(), l.open.end());
    } else if (tested.contains(i)) {
      const Block run = ident(l.p + 1, l.p + 12);
      out.insert(out.end(), run.begin(), run.end());
    } else {
      out.insert(out.end(), l.closed.begin(), l.closed.end());
    }
  }
  return out;
}

Variable variable(const IndexSet& positive, const IndexSet& negative, Element p,
                  const Literals& lits) {
  check_indices(lits, positive);
  check_indices(lits, negative);
  if (intersects(positive, negative)) {
    throw Error(Errc::OverlappingSets, "positive and negative occurrence sets intersect");
  }
  const Hook hk = hook(p + 2);
  const Fork fk = fork(p + 14);

  Block keys_pos;
  for (int i : positive) keys_pos.push_back(lits.key(i));
  Block keys_neg;
  for (int i : negative) keys_neg.push_back(lits.key(i));

  Variable v;
  v.positive = positive;
  v.negative = negative;
  v.p = p;
  v.trigger = hk.take;
  v.block = concat({hk.g, fk.e, keys_pos, Block{hk.put}, keys_neg, fk.f, hk.h});
  v.block_true = concat({hk.g_put, keys_neg, fk.f_in_order, hk.h_put});
  v.block_false = concat({hk.g_put, reversed(keys_pos), fk.f_reversed, hk.h_put});
  v.dock = dock(p + 2, p + 29);

  expect_interval(concat({Block{v.trigger}, without(v.block, concat({keys_pos, keys_neg})),
                          v.dock.block}),
                  p + 1, p + 31, "variable");
  return v;
}

Clause clause(int a, int b, int c, Element p, const Literals& lits) {
  check_indices(lits, {a, b, c});
  if (a == b || b == c || a == c) {
    throw Error(Errc::DuplicateIndices, "clause literal indices must be pairwise distinct");
  }
  const Fork f1 = fork(p + 2);
  const Fork f2 = fork(p + 45);
  const Hook h1 = hook(p + 21);
  const Hook h2 = hook(p + 33);
  const Dock d1 = dock(p + 2, p + 17);
  const Dock d2 = dock(p + 21, p + 60);
  const Element ta = lits.test(a);
  const Element tb = lits.test(b);
  const Element tc = lits.test(c);

  Clause cl;
  cl.a = a;
  cl.b = b;
  cl.c = c;
  cl.p = p;
  cl.trigger = h1.take;
  cl.block = concat({h1.g, f1.e, Block{h2.take, h1.put, tc}, f1.f, h2.g, f2.e,
                     Block{ta, h2.put, tb}, f2.f, h2.h, h1.h});
  cl.tested_a = concat({h1.g_put, Block{tc}, f1.f_in_order, h2.g_put, Block{tb}, f2.f_in_order,
                        h2.h_put, h1.h_put});
  cl.tested_b = concat({h1.g_put, Block{tc}, f1.f_in_order, h2.g_put, Block{ta}, f2.f_reversed,
                        h2.h_put, h1.h_put});
  cl.tested_c = concat({h1.g_put, Block{h2.take}, f1.f_reversed, h2.g, f2.e,
                        Block{ta, h2.put, tb}, f2.f, h2.h, h1.h_put});
  cl.docks = concat({d1.block, d2.block});

  expect_interval(concat({Block{cl.trigger}, without(cl.block, Block{ta, tb, tc}), cl.docks}),
                  p + 1, p + 62, "clause");
  return cl;
}

}  // namespace pancake
