#include <catch_amalgamated.hpp>

#include <random>

#include "picard/complex_rational.hpp"
#include "picard/gaussian.hpp"
#include "picard/integers.hpp"
#include "picard/sampling.hpp"

using namespace picard;

TEST_CASE("gaussian integer ring operations") {
    const GaussianInt a(1, 1);
    const GaussianInt b(1, -1);
    REQUIRE(a * b == GaussianInt(2));
    REQUIRE(conj(GaussianInt(3, 7)) == GaussianInt(3, -7));
    REQUIRE(norm(GaussianInt(3, 4)) == 25);
    REQUIRE(a + b == GaussianInt(2, 0));
    REQUIRE(a - b == GaussianInt(0, 2));
    REQUIRE(-a == GaussianInt(-1, -1));
    REQUIRE(norm(GaussianInt(0)) == 0);
    REQUIRE(norm(a) == 2);
}

TEST_CASE("powers of i") {
    REQUIRE(unit_i_pow(0) == GaussianInt(1));
    REQUIRE(unit_i_pow(1) == GaussianInt(0, 1));
    REQUIRE(unit_i_pow(2) == GaussianInt(-1));
    REQUIRE(unit_i_pow(3) == GaussianInt(0, -1));
    REQUIRE(unit_i_pow(4) == GaussianInt(1));
    REQUIRE(unit_i_pow(-1) == GaussianInt(0, -1));
    REQUIRE(unit_i_pow(7) == unit_i_pow(3));
}

TEST_CASE("rationals are reduced with positive denominator") {
    const Rational r = make_rational(Int(-6), Int(-4));
    REQUIRE(numerator(r) == 3);
    REQUIRE(denominator(r) == 2);
    const Rational s = make_rational(Int(6), Int(-4));
    REQUIRE(numerator(s) == -3);
    REQUIRE(denominator(s) == 2);
    REQUIRE_THROWS_AS(make_rational(Int(1), Int(0)), division_by_zero);
}

TEST_CASE("nearest integer rounds half to even") {
    REQUIRE(nearest_integer(make_rational(7, 3)) == 2);
    REQUIRE(nearest_integer(make_rational(5, 2)) == 2);
    REQUIRE(nearest_integer(make_rational(-1, 2)) == 0);
    REQUIRE(nearest_integer(make_rational(1, 2)) == 0);
    REQUIRE(nearest_integer(make_rational(3, 2)) == 2);
    REQUIRE(nearest_integer(make_rational(-3, 2)) == -2);
    REQUIRE(nearest_integer(make_rational(-5, 2)) == -2);
    REQUIRE(nearest_integer(make_rational(-7, 3)) == -2);
    REQUIRE(nearest_integer(Rational(4)) == 4);
    REQUIRE(nearest_integer(Rational(-4)) == -4);
    REQUIRE(nearest_integer(Rational(0)) == 0);
}

TEST_CASE("nearest integer bound on random rationals") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 1000; ++i) {
        const Rational x = random_rational(rng, 100000);
        const Rational d = x - Rational(nearest_integer(x));
        REQUIRE(2 * d <= 1);
        REQUIRE(2 * d >= -1);
    }
}

TEST_CASE("exact complex division") {
    const ComplexRational half_half{make_rational(1, 2), make_rational(1, 2)};
    REQUIRE(divide_exact_complex(GaussianInt(1, 1), GaussianInt(2)) == half_half);
    REQUIRE(divide_exact_complex(GaussianInt(0, 1), GaussianInt(1, 1)) == half_half);
    REQUIRE(divide_exact_complex(GaussianInt(0), GaussianInt(5, -3)) ==
            ComplexRational(GaussianInt(0)));
    REQUIRE_THROWS_AS(divide_exact_complex(GaussianInt(1), GaussianInt(0)),
                      division_by_zero);
}

TEST_CASE("division multiplies back exactly") {
    std::mt19937_64 rng(12);
    for (int i = 0; i < 300; ++i) {
        const GaussianInt p = random_gaussian(rng, 1000000);
        const GaussianInt q = random_gaussian_nonzero(rng, 1000000);
        REQUIRE(divide_exact_complex(p, q) * ComplexRational(q) == ComplexRational(p));
    }
}

TEST_CASE("norm and conjugation are multiplicative") {
    std::mt19937_64 rng(13);
    for (int i = 0; i < 1000; ++i) {
        const GaussianInt p = random_gaussian(rng, 1000000);
        const GaussianInt q = random_gaussian(rng, 1000000);
        REQUIRE(norm(p * q) == norm(p) * norm(q));
        REQUIRE(conj(p * q) == conj(p) * conj(q));
        REQUIRE(conj(conj(p)) == p);
        REQUIRE((norm(p) == 0) == (p == GaussianInt(0)));
    }
}

TEST_CASE("complex rational arithmetic") {
    const ComplexRational i{Rational(0), Rational(1)};
    REQUIRE(i * i == ComplexRational(Rational(-1)));
    const ComplexRational z{make_rational(1, 2), make_rational(-3, 4)};
    REQUIRE(z - z == ComplexRational(Rational(0)));
    REQUIRE(conj(z).im == make_rational(3, 4));
    REQUIRE(norm(z) == make_rational(13, 16));
    REQUIRE_FALSE(z.is_gaussian_integer());
    const ComplexRational w(GaussianInt(2, -5));
    REQUIRE(w.is_gaussian_integer());
    REQUIRE(w.to_gaussian() == GaussianInt(2, -5));
    REQUIRE_THROWS_AS(z.to_gaussian(), invariant_violation);
}

TEST_CASE("floor log2") {
    REQUIRE(floor_log2(Int(1)) == 0);
    REQUIRE(floor_log2(Int(2)) == 1);
    REQUIRE(floor_log2(Int(3)) == 1);
    REQUIRE(floor_log2(Int(4)) == 2);
    REQUIRE(floor_log2(Int(1024)) == 10);
    REQUIRE(floor_log2(Int(1025)) == 10);
}
