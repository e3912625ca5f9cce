#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace stickkit {

// Exact arbitrary-precision integer; every coefficient in the library is one.
// Fixed-width arithmetic is never used: central binomials already pass 64 bits
// near n = 67 and sweep rows go well beyond that.
using Integer = boost::multiprecision::cpp_int;

} // namespace stickkit
