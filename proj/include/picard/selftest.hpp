#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "picard/decompose.hpp"
#include "picard/matrix_json.hpp"
#include "picard/sampling.hpp"

namespace picard {

inline std::string matrix_key(const Mat3& m) {
    std::string k;
    for (const GaussianInt& z : m.e) {
        k += z.re.str();
        k += ',';
        k += z.im.str();
        k += ';';
    }
    return k;
}

// Ball of the Cayley graph over the letters {T1, T1^-1, T2, T2^-1, R, J},
// deduplicated by exact entries. ball_sizes[r] is the number of distinct
// elements given by words of length <= r.
struct BfsBall {
    std::vector<GroupMatrix> elements;
    std::vector<std::size_t> ball_sizes;
};

inline BfsBall enumerate_ball(int radius) {
    const GroupMatrix t1 = generator(Gen::T1);
    const GroupMatrix t2 = generator(Gen::T2);
    const std::vector<GroupMatrix> letters = {t1,           t1.inverse(), t2,
                                              t2.inverse(), generator(Gen::R),
                                              generator(Gen::J)};
    BfsBall out;
    std::unordered_set<std::string> seen;
    GroupMatrix id = GroupMatrix::identity();
    seen.insert(matrix_key(id.mat()));
    out.elements.push_back(id);
    out.ball_sizes.push_back(1);
    std::vector<GroupMatrix> frontier{id};
    for (int r = 1; r <= radius; ++r) {
        std::vector<GroupMatrix> next;
        for (const GroupMatrix& g : frontier)
            for (const GroupMatrix& l : letters) {
                GroupMatrix h = g * l;
                if (seen.insert(matrix_key(h.mat())).second) {
                    next.push_back(h);
                    out.elements.push_back(h);
                }
            }
        frontier = std::move(next);
        out.ball_sizes.push_back(out.elements.size());
    }
    return out;
}

struct SelftestOptions {
    int bfs_radius = 5;
    bool corrupt_rotation = false;  // negative control: perturbs R before the checks
    std::uint64_t seed = 0x9e3779b97f4a7c15ULL;
    int pair_samples = 1000;
    int stabilizer_samples = 500;
    int word_samples = 200;
    std::uint64_t word_max_length = 32;
};

// Runs the invariant suites and the BFS oracle; prints one line per suite
// and stops at the first counterexample. Returns true iff everything passed.
inline bool run_selftest(std::ostream& out, const SelftestOptions& opt = {}) {
    auto fail = [&out](const std::string& suite, const std::string& detail) {
        out << "FAIL " << suite << ": " << detail << "\n";
        out << "selftest: FAIL\n";
        return false;
    };

    // Generator relations, on raw matrices so the negative control can
    // corrupt them.
    {
        Mat3 r_mat = generator(Gen::R).mat();
        if (opt.corrupt_rotation) r_mat(1, 1) += GaussianInt(1);
        const Mat3 r2 = r_mat * r_mat;
        if (r2 * r2 != Mat3::identity())
            return fail("relations", "R^4 != I for R = " + matrix_to_json(r_mat));
        const Mat3 j_mat = generator(Gen::J).mat();
        if (j_mat * j_mat != Mat3::identity())
            return fail("relations", "J^2 != I");
        const HeisenbergParam p1 = HeisenbergParam::from_gamma_r(GaussianInt(0), 1);
        const HeisenbergParam p2 = HeisenbergParam::from_gamma_r(GaussianInt(1, 1), 0);
        for (const HeisenbergParam& p : {p1, p2}) {
            const GroupMatrix t = translation_matrix(p);
            if (t * translation_matrix(h_inverse(p)) != GroupMatrix::identity())
                return fail("relations", "translation times its inverse is not I");
        }
        for (Gen g : {Gen::T1, Gen::T2, Gen::J}) {
            try {
                verify_membership(generator(g).mat());
            } catch (const membership_error& e) {
                return fail("relations",
                            std::string(gen_name(g)) + " failed membership: " + e.what());
            }
        }
        try {
            verify_membership(r_mat);
        } catch (const membership_error& e) {
            return fail("relations", std::string("R failed membership: ") + e.what());
        }
        out << "ok   relations: J^2 = R^4 = I, translation inverses, membership\n";
    }

    // Heisenberg group law against the matrix representation.
    {
        std::mt19937_64 rng(opt.seed);
        for (int i = 0; i < opt.pair_samples; ++i) {
            const HeisenbergParam a = random_picard_param(rng, 50);
            const HeisenbergParam b = random_picard_param(rng, 50);
            if (translation_matrix(h_compose(a, b)) !=
                translation_matrix(a) * translation_matrix(b))
                return fail("heisenberg-homomorphism",
                            "matrix(a.b) != matrix(a) matrix(b) at sample " +
                                std::to_string(i));
        }
        out << "ok   heisenberg-homomorphism: " << opt.pair_samples << " random pairs\n";
    }

    // Stabilizer words: evaluate, J-freeness, classification roundtrip.
    {
        std::mt19937_64 rng(opt.seed + 1);
        for (int i = 0; i < opt.stabilizer_samples; ++i) {
            const StabilizerParams p = random_stabilizer_params(rng, 100);
            const GroupMatrix expect = stabilizer_matrix(p);
            const GeneratorWord w = stabilizer_word(p);
            for (const GeneratorToken& t : w.tokens)
                if (t.kind == Gen::J)
                    return fail("stabilizer-words", "word contains J: " + format_word(w));
            if (evaluate(w) != expect)
                return fail("stabilizer-words",
                            "word evaluates wrong: " + format_word(w));
            const auto back = classify_stabilizer(expect);
            if (!back || !(*back == p))
                return fail("stabilizer-words", "classification roundtrip failed");
        }
        out << "ok   stabilizer-words: " << opt.stabilizer_samples << " random parameters\n";
    }

    // Exact arithmetic: rounding bound, exact division, norm multiplicativity.
    {
        std::mt19937_64 rng(opt.seed + 2);
        for (int i = 0; i < 1000; ++i) {
            const Rational x = random_rational(rng, 1000);
            const Rational d = x - Rational(nearest_integer(x));
            if (2 * d > 1 || 2 * d < -1)
                return fail("exact-arithmetic", "|x - nearest(x)| > 1/2");
            const GaussianInt p = random_gaussian(rng, 1000);
            const GaussianInt q = random_gaussian_nonzero(rng, 1000);
            if (divide_exact_complex(p, q) * ComplexRational(q) != ComplexRational(p))
                return fail("exact-arithmetic", "(p/q)q != p");
            if (norm(p * q) != norm(p) * norm(q))
                return fail("exact-arithmetic", "norm not multiplicative");
        }
        out << "ok   exact-arithmetic: rounding, exact division, norms\n";
    }

    // Word normalization is idempotent and evaluation-preserving.
    {
        std::mt19937_64 rng(opt.seed + 3);
        for (int i = 0; i < opt.word_samples; ++i) {
            const GeneratorWord w = random_word(rng(), 12);
            const GeneratorWord n = normalize(w);
            if (normalize(n) != n)
                return fail("normalize", "not idempotent on " + format_word(w));
            if (evaluate(n) != evaluate(w))
                return fail("normalize", "changed value of " + format_word(w));
        }
        out << "ok   normalize: " << opt.word_samples << " random words\n";
    }

    // Random-word decomposition roundtrips.
    {
        std::mt19937_64 rng(opt.seed + 4);
        for (int i = 0; i < opt.word_samples; ++i) {
            const GeneratorWord w = random_word(rng(), opt.word_max_length);
            const GroupMatrix g = evaluate(w);
            const Decomposition d = decompose(g);
            if (evaluate(d.word) != g)
                return fail("roundtrip",
                            "decompose failed on word " + format_word(w) +
                                ", matrix " + matrix_to_json(g.mat()));
        }
        out << "ok   roundtrip: " << opt.word_samples << " random words, max length "
            << opt.word_max_length << "\n";
    }

    // BFS oracle: every element of the ball decomposes and roundtrips.
    {
        const BfsBall ball = enumerate_ball(opt.bfs_radius);
        for (int r = 0; r <= opt.bfs_radius; ++r)
            out << "ball radius <= " << r << ": " << ball.ball_sizes[static_cast<std::size_t>(r)]
                << " distinct elements\n";
        std::size_t total_steps = 0;
        for (const GroupMatrix& g : ball.elements) {
            try {
                verify_membership(g.mat());
            } catch (const membership_error& e) {
                return fail("bfs", std::string("ball element failed membership: ") + e.what() +
                                       " " + matrix_to_json(g.mat()));
            }
            const Decomposition d = decompose(g);
            if (evaluate(d.word) != g)
                return fail("bfs", "roundtrip failed on " + matrix_to_json(g.mat()) +
                                       ", word " + format_word(d.word));
            const bool stab = g(0, 2) == GaussianInt(0);
            bool has_j = false;
            for (const GeneratorToken& t : d.word.tokens)
                if (t.kind == Gen::J) has_j = true;
            if (stab == has_j)
                return fail("bfs", "J usage does not match stabilizer membership for " +
                                       matrix_to_json(g.mat()));
            if (!stab) {
                const Int n0 = norm(g(0, 2));
                if (d.trace.steps.size() > floor_log2(n0) + 1)
                    return fail("bfs", "step bound exceeded for " + matrix_to_json(g.mat()));
            }
            total_steps += d.trace.steps.size();
        }
        out << "ok   bfs: " << ball.elements.size() << " elements, " << total_steps
            << " contraction steps, all roundtrips exact\n";
    }

    out << "selftest: PASS\n";
    return true;
}

}  // namespace picard
