#pragma once

/**
 * @file numbers.hpp
 * @brief Exact number types: arbitrary-precision integers and rationals.
 *
 * All counting and series arithmetic in this library is exact. BigRat is
 * kept normalized by the backend: gcd(num, den) = 1 and den > 0.
 */

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <cstdint>
#include <string>

#include "synczeta/errors.hpp"

namespace synczeta {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

using boost::multiprecision::denominator;
using boost::multiprecision::numerator;

// Safe construction for arbitrary-sign denominators (the backend rejects
// a negative denominator in the two-argument constructor).
inline BigRat make_rat(const BigInt& num, const BigInt& den) {
    if (den == 0) throw Error("rational with zero denominator");
    return BigRat(num) / BigRat(den);
}

inline bool is_integer(const BigRat& q) { return denominator(q) == 1; }

inline BigInt to_integer(const BigRat& q) {
    if (!is_integer(q)) throw Error("rational " + q.str() + " is not an integer");
    return numerator(q);
}

inline BigInt abs_int(const BigInt& x) { return x < 0 ? BigInt(-x) : x; }
inline BigRat abs_rat(const BigRat& q) { return q < 0 ? BigRat(-q) : q; }

inline int sign(const BigInt& x) { return x < 0 ? -1 : (x > 0 ? 1 : 0); }
inline int sign(const BigRat& q) { return q < 0 ? -1 : (q > 0 ? 1 : 0); }

inline BigInt pow_int(const BigInt& base, std::size_t e) {
    BigInt r(1), b = base;
    while (e) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

inline BigRat pow_rat(const BigRat& base, long e) {
    if (e >= 0)
        return make_rat(pow_int(numerator(base), static_cast<std::size_t>(e)),
                        pow_int(denominator(base), static_cast<std::size_t>(e)));
    if (base == 0) throw Error("zero to a negative power");
    return make_rat(pow_int(denominator(base), static_cast<std::size_t>(-e)),
                    pow_int(numerator(base), static_cast<std::size_t>(-e)));
}

/// Natural log of a positive big integer, safe against double overflow.
inline double log_double(const BigInt& x) {
    if (x <= 0) throw Error("log of non-positive integer");
    const std::size_t bits = boost::multiprecision::msb(x);
    if (bits < 900) return std::log(static_cast<double>(x));
    const std::size_t shift = bits - 64;
    const BigInt top = x >> shift;
    return std::log(static_cast<double>(top)) + static_cast<double>(shift) * std::log(2.0);
}

inline double log_double(const BigRat& q) {
    if (q <= 0) throw Error("log of non-positive rational");
    return log_double(numerator(q)) - log_double(denominator(q));
}

/// n-th root of a nonnegative count as a double: exp(log(c)/n).
inline double nth_root(const BigInt& c, std::size_t n) {
    if (c < 0 || n == 0) throw Error("nth_root wants c >= 0, n >= 1");
    if (c == 0) return 0.0;
    return std::exp(log_double(c) / static_cast<double>(n));
}

}  // namespace synczeta
