#include "kernels_internal.hpp"

#include <algorithm>

namespace pancake::kernels::scalar {

std::size_t count_breakpoints(const Element* x, std::size_t n) {
  if (n == 0) return 0;
  std::size_t count = 0;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const Element d = x[i] - x[i + 1];
    count += (d != 1 && d != -1);
  }
  count += (x[n - 1] != static_cast<Element>(n));
  return count;
}

std::size_t index_of(const Element* x, std::size_t n, Element v) {
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i] == v) return i;
  }
  return npos;
}

void reverse_prefix(Element* x, std::size_t r) { std::reverse(x, x + r); }

}  // namespace pancake::kernels::scalar
