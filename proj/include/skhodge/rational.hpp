#pragma once

#include <gmpxx.h>
#include <string>

namespace skhodge {

// Exact rational scalar. mpq_class already keeps gcd(num,den)=1 and den>0
// after canonicalize(); all constructors below produce canonical values.
using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

// Parses "-2/3", "7", "0". Throws std::invalid_argument on malformed input.
Rational rat_parse(const std::string& s);

// Prints as "p" or "p/q".
std::string rat_str(const Rational& r);

}  // namespace skhodge
