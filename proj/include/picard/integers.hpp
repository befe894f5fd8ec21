#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <utility>

#include "picard/errors.hpp"

namespace picard {

// Arbitrary-precision integer and rational carriers. Rationals are kept in
// lowest terms with a positive denominator; every comparison below is exact.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Rational make_rational(Int num, Int den) {
    if (den == 0) throw division_by_zero("rational with zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    return Rational(std::move(num), std::move(den));
}

inline bool is_integral(const Rational& x) { return denominator(x) == 1; }

inline bool is_even(const Int& n) { return n % 2 == 0; }

// Nearest integer m to x, |x - m| <= 1/2 always; exact half-integers round
// to the even neighbor so results are reproducible byte-for-byte.
inline Int nearest_integer(const Rational& x) {
    const Int num = numerator(x);
    const Int den = denominator(x);  // > 0
    Int q, r;
    boost::multiprecision::divide_qr(num, den, q, r);
    if (r < 0) {  // divide_qr truncates toward zero; shift to floor
        q -= 1;
        r += den;
    }
    const Int twice = 2 * r;
    if (twice < den) return q;
    if (twice > den) return q + 1;
    return is_even(q) ? q : q + 1;
}

// floor(log2 n) for n >= 1.
inline unsigned floor_log2(const Int& n) {
    return boost::multiprecision::msb(n);
}

}  // namespace picard
