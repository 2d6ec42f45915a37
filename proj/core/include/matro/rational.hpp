#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace matro {

// Exact rational arithmetic.  Weights and matrix entries are never floats:
// all comparisons in this library are exact.
using Rat = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

// Parse "p", "-p" or "p/q" (q > 0 after normalization).  Throws
// MatroidError(RationalParseError) on anything else.
Rat parse_rational(std::string_view text);

// Render as "p" or "p/q" in lowest terms; inverse of parse_rational.
std::string format_rational(const Rat& value);

// A weight vector assigns a rational to each ground set element; index i
// holds the weight of element i+1.  Operations validate the length against
// the matroid at hand.
using WeightVector = std::vector<Rat>;

// Parse a comma-separated weight list such as "1,0,-2/3,4".
WeightVector parse_weights(std::string_view text);

}  // namespace matro
