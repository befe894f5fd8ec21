#pragma once

#include <optional>
#include <utility>

#include "picard/matrix.hpp"

namespace picard {

// Langlands data of a stabilizer element P = N_(gamma, |gamma|^2/2 + ir) . R^beta_exp.
// The dilation factor is forced to 1 inside the Picard group, so it does not
// appear. Construction enforces the parity constraint |gamma|^2 even.
class StabilizerParams {
public:
    StabilizerParams(int beta_exp, GaussianInt gamma, Int r)
        : beta_exp_(((beta_exp % 4) + 4) % 4), gamma_(std::move(gamma)), r_(std::move(r)) {
        if (!is_even(norm(gamma_)))
            throw invariant_violation("stabilizer parameter gamma has odd norm");
    }

    int beta_exp() const { return beta_exp_; }
    const GaussianInt& gamma() const { return gamma_; }
    const Int& r() const { return r_; }

    friend bool operator==(const StabilizerParams& a, const StabilizerParams& b) {
        return a.beta_exp_ == b.beta_exp_ && a.gamma_ == b.gamma_ && a.r_ == b.r_;
    }
    friend bool operator!=(const StabilizerParams& a, const StabilizerParams& b) {
        return !(a == b);
    }

private:
    int beta_exp_;
    GaussianInt gamma_;
    Int r_;
};

// The matrix N_(gamma, |gamma|^2/2 + ir) . R^beta_exp.
inline GroupMatrix stabilizer_matrix(const StabilizerParams& p) {
    GroupMatrix m = translation_matrix(
        HeisenbergParam::from_gamma_r(p.gamma(), Rational(p.r())));
    const GroupMatrix r = generator(Gen::R);
    for (int i = 0; i < p.beta_exp(); ++i) m = m * r;
    return m;
}

// A member stabilizes infinity iff g13 = 0; then it is lower triangular with
// g11 = g33 = i^e a unit, and the Langlands parameters can be read off:
// gamma = conj(beta) g21, |gamma|^2/2 + ir = conj(beta) g31.
// Returns nullopt when g13 != 0. Any failed derived constraint on a
// validated member signals an arithmetic bug, not bad input.
inline std::optional<StabilizerParams> classify_stabilizer(const GroupMatrix& g) {
    if (g(0, 2) != GaussianInt(0)) return std::nullopt;

    if (g(0, 1) != GaussianInt(0) || g(1, 2) != GaussianInt(0))
        throw std::logic_error("stabilizer inconsistency: member with g13=0 not lower triangular");

    const GaussianInt beta = g(0, 0);
    int beta_exp = -1;
    for (int e = 0; e < 4; ++e)
        if (beta == unit_i_pow(e)) beta_exp = e;
    if (beta_exp < 0)
        throw std::logic_error("stabilizer inconsistency: g11 is not a power of i");
    if (g(2, 2) != beta)
        throw std::logic_error("stabilizer inconsistency: g33 != g11");

    const GaussianInt beta_bar = conj(beta);
    if (g(1, 1) != beta_bar * beta_bar)
        throw std::logic_error("stabilizer inconsistency: g22 != conj(beta)^2");

    const GaussianInt gamma = beta_bar * g(1, 0);
    if (g(2, 1) != beta_bar * beta_bar * conj(gamma))
        throw std::logic_error("stabilizer inconsistency: g32 != conj(beta)^2 conj(gamma)");

    const GaussianInt w = beta_bar * g(2, 0);  // |gamma|^2/2 + ir
    if (2 * w.re != norm(gamma))
        throw std::logic_error("stabilizer inconsistency: Re(conj(beta) g31) != |gamma|^2/2");

    return StabilizerParams(beta_exp, gamma, w.im);
}

}  // namespace picard
