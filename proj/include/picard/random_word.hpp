#pragma once

#include <cstdint>
#include <limits>
#include <random>

#include "picard/word.hpp"

namespace picard {

// Unbiased draw from [0, n) by rejection. mt19937_64 output is fixed by the
// standard and the reduction is explicit, so sequences are reproducible
// byte-for-byte across platforms for a given seed.
inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t n) {
    const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
    const std::uint64_t limit = max - max % n;
    for (;;) {
        const std::uint64_t v = rng();
        if (v < limit) return v % n;
    }
}

// Signed draw from [lo, hi].
inline long long uniform_in(std::mt19937_64& rng, long long lo, long long hi) {
    return lo + static_cast<long long>(
                    uniform_below(rng, static_cast<std::uint64_t>(hi - lo + 1)));
}

// Pseudo-random word: length uniform in [0, max_length], kinds uniform over
// {T1, T2, R, J}, exponents uniform in [-5, 5] excluding 0; J tokens always
// have exponent 1. Words are sampled rather than matrices because the group
// is infinite and carries no uniform distribution.
inline GeneratorWord random_word(std::uint64_t seed, std::uint64_t max_length) {
    std::mt19937_64 rng(seed);
    GeneratorWord w;
    const std::uint64_t len = uniform_below(rng, max_length + 1);
    for (std::uint64_t i = 0; i < len; ++i) {
        const Gen kind = static_cast<Gen>(uniform_below(rng, 4));
        Int e(1);
        if (kind != Gen::J) {
            long long v = uniform_in(rng, -5, 4);
            if (v >= 0) ++v;  // skip 0
            e = v;
        }
        w.tokens.push_back({kind, std::move(e)});
    }
    return w;
}

}  // namespace picard
