#pragma once

#include <random>

#include "picard/heisenberg.hpp"
#include "picard/random_word.hpp"
#include "picard/stabilizer.hpp"

namespace picard {

// Samplers for randomized suites. All take an explicit engine so callers
// control the seed and stay reproducible.

inline GaussianInt random_gaussian(std::mt19937_64& rng, long long bound) {
    return {Int(uniform_in(rng, -bound, bound)), Int(uniform_in(rng, -bound, bound))};
}

inline GaussianInt random_gaussian_nonzero(std::mt19937_64& rng, long long bound) {
    for (;;) {
        GaussianInt z = random_gaussian(rng, bound);
        if (!z.is_zero()) return z;
    }
}

// gamma with re and im of equal parity, so |gamma|^2 is even.
inline GaussianInt random_even_norm_gaussian(std::mt19937_64& rng, long long bound) {
    for (;;) {
        GaussianInt z = random_gaussian(rng, bound);
        if (is_even(norm(z))) return z;
    }
}

// Boundary point of a Picard translation: (gamma, |gamma|^2/2 + ir).
inline HeisenbergParam random_picard_param(std::mt19937_64& rng, long long bound) {
    return HeisenbergParam::from_gamma_r(random_even_norm_gaussian(rng, bound),
                                         Rational(uniform_in(rng, -bound, bound)));
}

inline StabilizerParams random_stabilizer_params(std::mt19937_64& rng, long long bound) {
    return StabilizerParams(static_cast<int>(uniform_below(rng, 4)),
                            random_even_norm_gaussian(rng, bound),
                            Int(uniform_in(rng, -bound, bound)));
}

inline Rational random_rational(std::mt19937_64& rng, long long bound) {
    const Int num(uniform_in(rng, -bound, bound));
    const Int den(uniform_in(rng, 1, bound));
    return make_rational(num, den);
}

}  // namespace picard
