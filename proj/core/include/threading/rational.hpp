#pragma once

#include <boost/rational.hpp>

#include <string>

namespace threading {

// Exact rational arithmetic. All lengths, matching weights and duals in this
// library are rationals; no floating point enters any solver path.
using Rational = boost::rational<long long>;

// Parses an unsigned decimal literal ("3", "1.5", "0.25") into an exact
// rational. Throws std::invalid_argument on malformed input.
Rational parse_decimal(const std::string& text);

// Renders as "p/q" (q included even when 1, so output is byte-stable).
std::string to_fraction_string(const Rational& r);

// Fixed-point approximation with the given number of fractional digits,
// rounded toward zero. Display only; never fed back into computations.
std::string to_decimal_string(const Rational& r, int digits = 6);

}  // namespace threading
