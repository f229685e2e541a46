#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <stdexcept>
#include <string>

namespace ehrhart {

/// Arbitrary-precision integer (GMP-backed).
using Int = boost::multiprecision::mpz_int;

/// Arbitrary-precision rational, always canonical: lowest terms, positive
/// denominator. All arithmetic is exact; nothing in the library ever rounds
/// a Rat.
using Rat = boost::multiprecision::mpq_rational;

/// Floor division a/b for b != 0 (round toward -infinity).
inline Int floor_div(const Int& a, const Int& b) {
    Int q = a / b;
    if ((a % b) != 0 && ((a < 0) != (b < 0))) --q;
    return q;
}

/// Ceiling division a/b for b != 0 (round toward +infinity).
inline Int ceil_div(const Int& a, const Int& b) {
    Int q = a / b;
    if ((a % b) != 0 && ((a < 0) == (b < 0))) ++q;
    return q;
}

inline Int rat_floor(const Rat& q) { return floor_div(numerator(q), denominator(q)); }
inline Int rat_ceil(const Rat& q) { return ceil_div(numerator(q), denominator(q)); }

inline bool is_integer(const Rat& q) { return denominator(q) == 1; }

inline double to_double(const Rat& q) { return q.convert_to<double>(); }
inline double to_double(const Int& n) { return n.convert_to<double>(); }

inline int sign(const Rat& q) { return q.sign(); }
inline int sign(const Int& n) { return n.sign(); }

/// Exact rational from "p/q" or "p" text (the JSON wire format).
inline Rat rat_from_string(const std::string& s) {
    try {
        Rat q(s);
        return q;
    } catch (const std::exception&) {
        throw std::invalid_argument("not a rational: '" + s + "'");
    }
}

/// Canonical "p/q" text ("p" when the denominator is 1).
inline std::string rat_to_string(const Rat& q) { return q.str(); }

inline Int factorial(unsigned n) {
    Int f = 1;
    for (unsigned i = 2; i <= n; ++i) f *= i;
    return f;
}

}  // namespace ehrhart
