#pragma once
#include <boost/multiprecision/cpp_int.hpp>
#include <string>

#include "finecurves/errors.hpp"

namespace finecurves {

// All geometry in this library is exact. Coordinates, offsets and predicate
// intermediates are arbitrary-precision rationals; no floating point is used
// anywhere in the computational paths (rendering formats decimals by integer
// long division).
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline int sgn(const Rat& r) {
    if (r > 0) return 1;
    if (r < 0) return -1;
    return 0;
}

inline Rat rat_abs(const Rat& r) { return r < 0 ? Rat(-r) : r; }

// Canonical "p/q" text form (q >= 1, gcd(p,q)=1, q printed even when 1) so
// serialized certificates round-trip bit-exactly.
std::string rat_to_string(const Rat& r);

// Accepts "p" or "p/q" with optional leading '-'. Throws ParseError.
Rat rat_from_string(const std::string& s);

// Fixed-point decimal with `digits` fractional digits, correctly truncated
// toward zero, computed with integer arithmetic only. Used by the SVG writer.
std::string rat_to_decimal(const Rat& r, int digits);

} // namespace finecurves
