#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace spr {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// C(n, k) as an exact integer; 0 for k < 0 or k > n.
Int binomial(long n, long k);

// Canonical "num" or "num/den" rendering, never floating point.
std::string rat_to_string(const Rat& r);

} // namespace spr
