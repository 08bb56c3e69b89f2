#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace schreier {

/// Exact unbounded integer for Fibonacci numbers, binomials and family sizes.
using BigInt = boost::multiprecision::cpp_int;

}  // namespace schreier
