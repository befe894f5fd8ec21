#include <catch_amalgamated.hpp>

#include <array>
#include <random>

#include "picard/matrix.hpp"
#include "picard/sampling.hpp"
#include "picard/stabilizer.hpp"

using namespace picard;

namespace {

// Independent determinant oracle: explicit sum over the six permutations.
GaussianInt perm_det(const Mat3& m) {
    return m(0, 0) * m(1, 1) * m(2, 2) + m(0, 1) * m(1, 2) * m(2, 0) +
           m(0, 2) * m(1, 0) * m(2, 1) - m(0, 2) * m(1, 1) * m(2, 0) -
           m(0, 1) * m(1, 0) * m(2, 2) - m(0, 0) * m(1, 2) * m(2, 1);
}

}  // namespace

TEST_CASE("hermitian form matrix") {
    const Mat3 c = form_matrix();
    REQUIRE(c(0, 2) == GaussianInt(-1));
    REQUIRE(c(1, 1) == GaussianInt(1));
    REQUIRE(c(2, 0) == GaussianInt(-1));
    REQUIRE(c(0, 0) == GaussianInt(0));
    REQUIRE(c(0, 1) == GaussianInt(0));
    REQUIRE(c * c == Mat3::identity());
    REQUIRE(c.adjoint() == c);
    REQUIRE(c.det() == GaussianInt(-1));
}

TEST_CASE("generator entries") {
    const GroupMatrix t1 = generator(Gen::T1);
    for (int r = 0; r < 3; ++r)
        for (int col = 0; col < 3; ++col) {
            GaussianInt expect = r == col ? GaussianInt(1) : GaussianInt(0);
            if (r == 2 && col == 0) expect = GaussianInt(0, 1);
            REQUIRE(t1(r, col) == expect);
        }

    const GroupMatrix t2 = generator(Gen::T2);
    REQUIRE(t2(1, 0) == GaussianInt(1, 1));
    REQUIRE(t2(2, 0) == GaussianInt(1));
    REQUIRE(t2(2, 1) == GaussianInt(1, -1));
    REQUIRE(t2(0, 0) == GaussianInt(1));
    REQUIRE(t2(1, 1) == GaussianInt(1));
    REQUIRE(t2(2, 2) == GaussianInt(1));
    REQUIRE(t2(0, 1) == GaussianInt(0));
    REQUIRE(t2(0, 2) == GaussianInt(0));
    REQUIRE(t2(1, 2) == GaussianInt(0));

    const GroupMatrix r = generator(Gen::R);
    REQUIRE(r(0, 0) == GaussianInt(0, 1));
    REQUIRE(r(1, 1) == GaussianInt(-1));
    REQUIRE(r(2, 2) == GaussianInt(0, 1));
    REQUIRE(r(0, 1) == GaussianInt(0));

    const GroupMatrix j = generator(Gen::J);
    REQUIRE(j(0, 2) == GaussianInt(-1));
    REQUIRE(j(1, 1) == GaussianInt(-1));
    REQUIRE(j(2, 0) == GaussianInt(-1));
    REQUIRE(j(0, 0) == GaussianInt(0));
    REQUIRE(j(2, 2) == GaussianInt(0));
}

TEST_CASE("generators are members with determinant one") {
    for (Gen g : {Gen::T1, Gen::T2, Gen::R, Gen::J}) {
        const Mat3 m = generator(g).mat();
        REQUIRE_NOTHROW(verify_membership(m));
        REQUIRE(m.det() == GaussianInt(1));
        REQUIRE(perm_det(m) == GaussianInt(1));
    }
}

TEST_CASE("generator relations") {
    const GroupMatrix j = generator(Gen::J);
    REQUIRE(j * j == GroupMatrix::identity());
    const GroupMatrix r = generator(Gen::R);
    REQUIRE(r * r * r * r == GroupMatrix::identity());
    REQUIRE_FALSE(r * r == GroupMatrix::identity());

    const HeisenbergParam t1p = HeisenbergParam::from_gamma_r(GaussianInt(0), 1);
    const HeisenbergParam t2p = HeisenbergParam::from_gamma_r(GaussianInt(1, 1), 0);
    REQUIRE(generator(Gen::T1) * translation_matrix(h_inverse(t1p)) ==
            GroupMatrix::identity());
    REQUIRE(generator(Gen::T2) * translation_matrix(h_inverse(t2p)) ==
            GroupMatrix::identity());
}

TEST_CASE("translation matrices") {
    REQUIRE(translation_matrix(HeisenbergParam::from_gamma_r(GaussianInt(0), 1)) ==
            generator(Gen::T1));
    REQUIRE(translation_matrix(HeisenbergParam::from_gamma_r(GaussianInt(1, 1), 0)) ==
            generator(Gen::T2));
    REQUIRE(translation_matrix(HeisenbergParam::origin()) == GroupMatrix::identity());
    const HeisenbergParam odd = HeisenbergParam::from_gamma_r(GaussianInt(1, 0), 0);
    REQUIRE_THROWS_AS(translation_matrix(odd), invariant_violation);
}

TEST_CASE("translation homomorphism") {
    std::mt19937_64 rng(31);
    for (int i = 0; i < 500; ++i) {
        const HeisenbergParam a = random_picard_param(rng, 1000);
        const HeisenbergParam b = random_picard_param(rng, 1000);
        REQUIRE(translation_matrix(h_compose(a, b)) ==
                translation_matrix(a) * translation_matrix(b));
    }
}

TEST_CASE("inverses") {
    std::mt19937_64 rng(32);
    GroupMatrix g = GroupMatrix::identity();
    for (int i = 0; i < 40; ++i) {
        const StabilizerParams p = random_stabilizer_params(rng, 40);
        g = g * stabilizer_matrix(p) * generator(Gen::J);
        REQUIRE(g * g.inverse() == GroupMatrix::identity());
        REQUIRE(g.inverse() * g == GroupMatrix::identity());
    }
    REQUIRE(perm_det(g.mat()) == GaussianInt(1));
    REQUIRE(g.mat().det() == GaussianInt(1));
}

TEST_CASE("integer powers") {
    const GroupMatrix r = generator(Gen::R);
    REQUIRE(pow(r, 5) == r);
    REQUIRE(pow(r, 0) == GroupMatrix::identity());
    REQUIRE(pow(r, -1) == r * r * r);
    REQUIRE(pow(generator(Gen::J), 2) == GroupMatrix::identity());
    REQUIRE(pow(generator(Gen::T2), 3) ==
            translation_matrix(HeisenbergParam::from_gamma_r(GaussianInt(3, 3), 0)));
    const GroupMatrix t1 = generator(Gen::T1);
    REQUIRE(pow(t1, -4) == pow(t1, 4).inverse());
}

TEST_CASE("membership rejections") {
    Mat3 bad = Mat3::identity();
    bad(0, 2) = GaussianInt(1);
    try {
        verify_membership(bad);
        FAIL("expected rejection");
    } catch (const membership_error& e) {
        REQUIRE(e.why() == membership_error::reason::form_violation);
        REQUIRE(membership_error::describe(e.why()) == std::string("form-violation"));
    }

    // diag(i, 1, i) preserves the form but has determinant -1
    Mat3 unit = Mat3::identity();
    unit(0, 0) = GaussianInt(0, 1);
    unit(2, 2) = GaussianInt(0, 1);
    REQUIRE(unit.adjoint() * form_matrix() * unit == form_matrix());
    REQUIRE(perm_det(unit) == GaussianInt(-1));
    try {
        verify_membership(unit);
        FAIL("expected rejection");
    } catch (const membership_error& e) {
        REQUIRE(e.why() == membership_error::reason::determinant_violation);
        REQUIRE(membership_error::describe(e.why()) ==
                std::string("determinant-violation"));
    }
}

TEST_CASE("stabilizer parameter constraints") {
    REQUIRE_THROWS_AS(StabilizerParams(0, GaussianInt(1, 0), 0), invariant_violation);
    const StabilizerParams p(-1, GaussianInt(1, 1), 7);
    REQUIRE(p.beta_exp() == 3);
    REQUIRE(StabilizerParams(6, GaussianInt(0), 0).beta_exp() == 2);
}

TEST_CASE("stabilizer classification of generators") {
    const auto t1 = classify_stabilizer(generator(Gen::T1));
    REQUIRE(t1.has_value());
    REQUIRE(t1->beta_exp() == 0);
    REQUIRE(t1->gamma() == GaussianInt(0));
    REQUIRE(t1->r() == 1);

    const auto r = classify_stabilizer(generator(Gen::R));
    REQUIRE(r.has_value());
    REQUIRE(r->beta_exp() == 1);
    REQUIRE(r->gamma() == GaussianInt(0));
    REQUIRE(r->r() == 0);

    const auto t2 = classify_stabilizer(generator(Gen::T2));
    REQUIRE(t2.has_value());
    REQUIRE(t2->beta_exp() == 0);
    REQUIRE(t2->gamma() == GaussianInt(1, 1));
    REQUIRE(t2->r() == 0);

    REQUIRE_FALSE(classify_stabilizer(generator(Gen::J)).has_value());
}

TEST_CASE("stabilizer roundtrip on random parameters") {
    std::mt19937_64 rng(33);
    for (int i = 0; i < 500; ++i) {
        const StabilizerParams p = random_stabilizer_params(rng, 100);
        const GroupMatrix g = stabilizer_matrix(p);
        REQUIRE(g(0, 2) == GaussianInt(0));
        const auto back = classify_stabilizer(g);
        REQUIRE(back.has_value());
        REQUIRE(back->beta_exp() == p.beta_exp());
        REQUIRE(back->gamma() == p.gamma());
        REQUIRE(back->r() == p.r());
    }
}

TEST_CASE("stabilizer matrix structure") {
    const StabilizerParams p(2, GaussianInt(3, 1), -4);
    const GroupMatrix g = stabilizer_matrix(p);
    const GaussianInt beta = unit_i_pow(2);
    REQUIRE(g(0, 0) == beta);
    REQUIRE(g(2, 2) == beta);
    REQUIRE(g(1, 1) == conj(beta) * conj(beta));
    REQUIRE(g(0, 1) == GaussianInt(0));
    REQUIRE(g(0, 2) == GaussianInt(0));
    REQUIRE(g(1, 2) == GaussianInt(0));
    REQUIRE(g(1, 0) == beta * p.gamma());
    const GaussianInt g31 = g(2, 0);
    REQUIRE(2 * (conj(beta) * g31).re == norm(p.gamma()));
    REQUIRE((conj(beta) * g31).im == p.r());
}
