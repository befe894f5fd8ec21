#pragma once

#include <ostream>
#include <utility>

#include "picard/gaussian.hpp"
#include "picard/integers.hpp"

namespace picard {

// Element of Q(i). Both components stay in lowest terms; arithmetic is exact.
struct ComplexRational {
    Rational re{0};
    Rational im{0};

    ComplexRational() = default;
    ComplexRational(Rational r) : re(std::move(r)) {}  // NOLINT: implicit
    ComplexRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
    ComplexRational(const GaussianInt& z) : re(z.re), im(z.im) {}  // NOLINT: implicit

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_gaussian_integer() const { return is_integral(re) && is_integral(im); }

    // Requires is_gaussian_integer().
    GaussianInt to_gaussian() const {
        if (!is_gaussian_integer())
            throw invariant_violation("value is not a Gaussian integer");
        return {numerator(re), numerator(im)};
    }

    friend ComplexRational operator+(const ComplexRational& a, const ComplexRational& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend ComplexRational operator-(const ComplexRational& a, const ComplexRational& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend ComplexRational operator-(const ComplexRational& a) { return {-a.re, -a.im}; }
    friend ComplexRational operator*(const ComplexRational& a, const ComplexRational& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }

    friend bool operator==(const ComplexRational& a, const ComplexRational& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const ComplexRational& a, const ComplexRational& b) {
        return !(a == b);
    }

    friend std::ostream& operator<<(std::ostream& os, const ComplexRational& z) {
        return os << "(" << z.re << ", " << z.im << ")";
    }
};

inline ComplexRational conj(const ComplexRational& z) { return {z.re, -z.im}; }

inline Rational norm(const ComplexRational& z) { return z.re * z.re + z.im * z.im; }

// Exact quotient p/q in Q(i): multiplying the result back by q recovers p.
inline ComplexRational divide_exact_complex(const GaussianInt& p, const GaussianInt& q) {
    if (q.is_zero()) throw division_by_zero("Gaussian division by zero");
    const GaussianInt w = p * conj(q);
    const Int n = norm(q);
    return {make_rational(w.re, n), make_rational(w.im, n)};
}

}  // namespace picard
