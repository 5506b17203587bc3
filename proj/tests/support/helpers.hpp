#pragma once

#include <vector>

#include "oracles.hpp"
#include "pancake/sequence.hpp"

inline pancake::Sequence to_seq(const oracle::Perm& x) {
  return pancake::Sequence(pancake::Block(x.begin(), x.end()));
}

inline oracle::Perm to_perm(const pancake::Sequence& s) {
  return oracle::Perm(s.elements().begin(), s.elements().end());
}

inline std::vector<std::size_t> to_vector(const pancake::FlipSet& f) {
  return std::vector<std::size_t>(f.begin(), f.end());
}
