#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace hookmax {

// Exact unbounded integer used wherever values can outgrow machine words
// (series coefficients, weighted hook sums).
using BigInt = boost::multiprecision::cpp_int;

} // namespace hookmax
