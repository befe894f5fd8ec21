#pragma once

#include <utility>

#include "picard/complex_rational.hpp"
#include "picard/gaussian.hpp"

namespace picard {

// Boundary point (a1, a2) with Re a2 = |a1|^2 / 2, parametrizing the
// Heisenberg translation N_a. Construction enforces the boundary condition,
// so every live value satisfies it.
class HeisenbergParam {
public:
    HeisenbergParam(GaussianInt a1, ComplexRational a2)
        : a1_(std::move(a1)), a2_(std::move(a2)) {
        if (a2_.re * 2 != Rational(norm(a1_)))
            throw invariant_violation("boundary condition Re(a2) = |a1|^2/2 violated");
    }

    // (gamma, |gamma|^2/2 + i r)
    static HeisenbergParam from_gamma_r(GaussianInt gamma, Rational r) {
        Rational half_sq = make_rational(norm(gamma), 2);
        return HeisenbergParam(std::move(gamma), ComplexRational(std::move(half_sq), std::move(r)));
    }

    static HeisenbergParam origin() { return from_gamma_r(GaussianInt(0), Rational(0)); }

    const GaussianInt& a1() const { return a1_; }
    const ComplexRational& a2() const { return a2_; }
    Rational vertical() const { return a2_.im; }  // the r in (gamma, |gamma|^2/2 + ir)

    // a2 in Z[i]; equivalently |a1|^2 even and r integral. Exactly the
    // translations that lie in the Picard group.
    bool is_picard() const { return a2_.is_gaussian_integer(); }

    friend bool operator==(const HeisenbergParam& a, const HeisenbergParam& b) {
        return a.a1_ == b.a1_ && a.a2_ == b.a2_;
    }
    friend bool operator!=(const HeisenbergParam& a, const HeisenbergParam& b) {
        return !(a == b);
    }

private:
    GaussianInt a1_;
    ComplexRational a2_;
};

// Group law: N_a . N_b = N_(a1+b1, a2+b2+conj(a1) b1). Not commutative.
inline HeisenbergParam h_compose(const HeisenbergParam& a, const HeisenbergParam& b) {
    return HeisenbergParam(a.a1() + b.a1(),
                           a.a2() + b.a2() + ComplexRational(conj(a.a1()) * b.a1()));
}

// N_a^-1 = N_(-a1, -a2 + |a1|^2)
inline HeisenbergParam h_inverse(const HeisenbergParam& a) {
    return HeisenbergParam(-a.a1(), -a.a2() + ComplexRational(Rational(norm(a.a1()))));
}

// k-fold composition; powers of one element commute, so square-and-multiply
// is sound. Closed forms exist for the special directions (0,i) and (1+i,1)
// and are used as cross-checks in the tests, not here.
inline HeisenbergParam h_power(const HeisenbergParam& a, Int k) {
    if (k < 0) return h_power(h_inverse(a), -k);
    HeisenbergParam acc = HeisenbergParam::origin();
    HeisenbergParam base = a;
    while (k > 0) {
        if (!is_even(k)) acc = h_compose(acc, base);
        k >>= 1;
        if (k > 0) base = h_compose(base, base);
    }
    return acc;
}

}  // namespace picard
