#pragma once

#include <utility>
#include <vector>

#include "picard/stabilizer.hpp"
#include "picard/word.hpp"

namespace picard {

// One contraction step: the chosen data and the exact certificate values.
// |g13|^2 after is at most half of |g13|^2 before, both nonnegative integers.
struct ReductionStep {
    GroupMatrix before;          // matrix at step entry
    Int m, n, k;                 // nearest-integer choices
    GaussianInt gamma;           // (m-n) + (m+n)i
    HeisenbergParam translation; // (gamma, |gamma|^2/2 + ik)
    Int norm13_before;
    Int norm13_after;
    Rational i1, i2;             // g13_next = -g13 (i1 + i i2)
};

struct ReductionTrace {
    std::vector<ReductionStep> steps;
};

struct StepResult {
    GroupMatrix next;
    ReductionStep record;
};

struct Decomposition {
    GeneratorWord word;
    ReductionTrace trace;
};

// Word for a stabilizer element: with gamma = m + in, k = (m+n)/2 and
// l = (n-m)/2 (integers by the parity constraint),
//
//   P = T1^(r-2kl) . T2^k . R . T2^l . R^-1 . R^beta_exp
//
// normalized. Evaluates to stabilizer_matrix(p) and contains no J.
inline GeneratorWord stabilizer_word(const StabilizerParams& p) {
    const Int& m = p.gamma().re;
    const Int& n = p.gamma().im;
    const Int k = (m + n) / 2;
    const Int l = (n - m) / 2;
    GeneratorWord w;
    w.tokens.push_back({Gen::T1, p.r() - 2 * k * l});
    w.tokens.push_back({Gen::T2, k});
    w.tokens.push_back({Gen::R, Int(1)});
    w.tokens.push_back({Gen::T2, l});
    w.tokens.push_back({Gen::R, Int(-1) + p.beta_exp()});
    return normalize(w);
}

// One step of the contraction loop. Requires g13 != 0. Chooses the nearest
// Picard translation N to the ideal image of g and returns J N g together
// with the exact certificate, which is re-derived and checked here:
//
//   g13' = -g13 (I1 + i I2),  I1 = (x-m)^2 + (y-n)^2 <= 1/2,  |I2| <= 1/2,
//
// hence |g13'|^2 = |g13|^2 (I1^2 + I2^2) <= |g13|^2 / 2.
inline StepResult reduction_step(const GroupMatrix& g) {
    const GaussianInt& g13 = g(0, 2);
    if (g13 == GaussianInt(0))
        throw invariant_violation("reduction step requires g13 != 0");

    const ComplexRational ratio23 = divide_exact_complex(g(1, 2), g13);  // g23/g13
    const ComplexRational ratio33 = divide_exact_complex(g(2, 2), g13);  // g33/g13

    // -g23/g13 = x(1+i) + y(-1+i)
    const ComplexRational w = -ratio23;
    const Rational x = (w.re + w.im) / 2;
    const Rational y = (w.im - w.re) / 2;
    const Int m = nearest_integer(x);
    const Int n = nearest_integer(y);
    const GaussianInt gamma(m - n, m + n);

    const ComplexRational u = ComplexRational(conj(gamma)) * ratio23 + ratio33;
    const Int k = nearest_integer(-u.im);

    // |gamma|^2 = 2(m^2 + n^2) is even, so the translation is Picard.
    const HeisenbergParam trans =
        HeisenbergParam::from_gamma_r(gamma, Rational(k));
    const GroupMatrix next = generator(Gen::J) * translation_matrix(trans) * g;

    // Exact certificate. I1 has two independent expressions; both are
    // computed and must agree.
    const Rational i1 = Rational(m * m + n * n) + u.re;
    const Rational i1_geom = (x - m) * (x - m) + (y - n) * (y - n);
    const Rational i2 = Rational(k) + u.im;
    if (i1 != i1_geom)
        throw std::logic_error("contraction certificate: I1 expressions disagree");
    if (2 * i1 > 1 || 2 * i1 < 0)
        throw std::logic_error("contraction certificate: I1 out of [0, 1/2]");
    if (2 * i2 > 1 || 2 * i2 < -1)
        throw std::logic_error("contraction certificate: |I2| > 1/2");

    const Int norm_before = norm(g13);
    const Int norm_after = norm(next(0, 2));
    if (Rational(norm_after) != Rational(norm_before) * (i1 * i1 + i2 * i2))
        throw std::logic_error("contraction certificate: |g13'|^2 != |g13|^2 (I1^2 + I2^2)");
    if (2 * norm_after > norm_before)
        throw std::logic_error("contraction certificate: |g13|^2 did not halve");

    ReductionStep record{g,    m,           n,          k,  gamma, trans,
                         norm_before, norm_after, i1, i2};
    return StepResult{next, std::move(record)};
}

// Full constructive decomposition. Iterates the contraction step until
// g13 = 0, then classifies the remaining stabilizer element:
//
//   G = N1^-1 J N2^-1 J ... Ns^-1 J P
//
// where each Ni^-1 is again a Picard translation and expands through
// stabilizer_word, as does P. The returned word is normalized and evaluates
// to g exactly; the step count is at most floor(log2 |g13|^2) + 1.
inline Decomposition decompose(const GroupMatrix& g) {
    Decomposition out;
    GroupMatrix cur = g;
    while (cur(0, 2) != GaussianInt(0)) {
        StepResult step = reduction_step(cur);
        cur = step.next;
        out.trace.steps.push_back(std::move(step.record));
    }

    GeneratorWord word;
    for (const ReductionStep& s : out.trace.steps) {
        const HeisenbergParam inv = h_inverse(s.translation);
        if (!inv.is_picard())
            throw std::logic_error("inverse of a Picard translation left the Picard group");
        const StabilizerParams p(0, inv.a1(), numerator(inv.vertical()));
        GeneratorWord piece = stabilizer_word(p);
        word.tokens.insert(word.tokens.end(), piece.tokens.begin(), piece.tokens.end());
        word.tokens.push_back({Gen::J, Int(1)});
    }

    const auto tail = classify_stabilizer(cur);
    if (!tail)
        throw std::logic_error("contraction loop ended with g13 != 0");
    GeneratorWord piece = stabilizer_word(*tail);
    word.tokens.insert(word.tokens.end(), piece.tokens.begin(), piece.tokens.end());

    out.word = normalize(word);
    return out;
}

}  // namespace picard
