#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace brg {

// Exact arbitrary-precision integer used for polynomial coefficients and
// combinatorial counts.
using BigInt = boost::multiprecision::cpp_int;

}  // namespace brg
