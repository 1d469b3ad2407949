#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace derange {

// Exact integer / rational types used throughout: facet-derangement counts
// overflow 64 bits well before n = 50.
using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

}  // namespace derange
