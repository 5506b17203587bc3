#pragma once

#include "pancake/kernels.hpp"

namespace pancake::kernels {

namespace scalar {
std::size_t count_breakpoints(const Element* x, std::size_t n);
std::size_t index_of(const Element* x, std::size_t n, Element v);
void reverse_prefix(Element* x, std::size_t r);
}  // namespace scalar

#if defined(PANCAKE_HAVE_AVX2)
namespace avx2 {
std::size_t count_breakpoints(const Element* x, std::size_t n);
std::size_t index_of(const Element* x, std::size_t n, Element v);
void reverse_prefix(Element* x, std::size_t r);
}  // namespace avx2
#endif

}  // namespace pancake::kernels
