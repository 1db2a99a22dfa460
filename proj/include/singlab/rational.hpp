#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "singlab/errors.hpp"

namespace singlab {

// Exact arithmetic types. cpp_rational keeps gcd(|num|, den) = 1 and den > 0
// as a class invariant, which is exactly the canonical form we need.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Integer rational_num(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Integer rational_den(const Rational& q) { return boost::multiprecision::denominator(q); }

/// floor(q) as an exact integer.
inline Integer floor_int(const Rational& q) {
    Integer n = rational_num(q), d = rational_den(q);
    Integer f = n / d;
    if (n < 0 && n % d != 0) --f;
    return f;
}

/// q - floor(q), always in [0,1).
inline Rational frac_part(const Rational& q) {
    return q - Rational(floor_int(q));
}

inline bool is_integer(const Rational& q) { return rational_den(q) == 1; }

inline Integer gcd_int(const Integer& a, const Integer& b) {
    return boost::multiprecision::gcd(a, b);
}

inline Integer lcm_int(const Integer& a, const Integer& b) {
    return boost::multiprecision::lcm(a, b);
}

inline double to_double(const Rational& q) { return q.template convert_to<double>(); }

/// Canonical text form: "p/q", or just "p" when q = 1.
inline std::string to_string(const Rational& q) { return q.str(); }
inline std::string to_string(const Integer& n) { return n.str(); }

/// Inverse of to_string. Accepts "p" and "p/q" with optional sign.
inline Rational rational_from_string(const std::string& s) {
    try {
        Rational q(s);
        return q;
    } catch (const std::exception&) {
        throw Error("invalid rational literal '" + s + "'");
    }
}

}  // namespace singlab
