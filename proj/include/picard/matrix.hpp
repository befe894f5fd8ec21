#pragma once

#include <array>
#include <cstddef>
#include <ostream>
#include <utility>

#include "picard/gaussian.hpp"
#include "picard/heisenberg.hpp"

namespace picard {

// Plain 3x3 matrix over Z[i], row-major, 0-based. Carries no invariant;
// GroupMatrix below is the validated subtype.
struct Mat3 {
    std::array<GaussianInt, 9> e{};

    GaussianInt& operator()(int r, int c) { return e[static_cast<std::size_t>(3 * r + c)]; }
    const GaussianInt& operator()(int r, int c) const {
        return e[static_cast<std::size_t>(3 * r + c)];
    }

    static Mat3 identity() {
        Mat3 m;
        m(0, 0) = m(1, 1) = m(2, 2) = GaussianInt(1);
        return m;
    }

    friend Mat3 operator*(const Mat3& a, const Mat3& b) {
        Mat3 p;
        for (int r = 0; r < 3; ++r)
            for (int c = 0; c < 3; ++c) {
                GaussianInt s;
                for (int k = 0; k < 3; ++k) s += a(r, k) * b(k, c);
                p(r, c) = std::move(s);
            }
        return p;
    }

    // Conjugate transpose.
    Mat3 adjoint() const {
        Mat3 t;
        for (int r = 0; r < 3; ++r)
            for (int c = 0; c < 3; ++c) t(r, c) = conj((*this)(c, r));
        return t;
    }

    GaussianInt det() const {
        const Mat3& m = *this;
        return m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) -
               m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
               m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
    }

    friend bool operator==(const Mat3& a, const Mat3& b) { return a.e == b.e; }
    friend bool operator!=(const Mat3& a, const Mat3& b) { return !(a == b); }

    friend std::ostream& operator<<(std::ostream& os, const Mat3& m) {
        for (int r = 0; r < 3; ++r) {
            os << (r == 0 ? "[" : " ");
            for (int c = 0; c < 3; ++c) os << m(r, c) << (c < 2 ? "  " : "");
            os << (r == 2 ? "]" : "\n");
        }
        return os;
    }
};

// The Hermitian form: antidiagonal -1, center 1. C^2 = I but det C = -1,
// so C itself is not a group element.
inline const Mat3& form_matrix() {
    static const Mat3 C = [] {
        Mat3 m;
        m(0, 2) = GaussianInt(-1);
        m(1, 1) = GaussianInt(1);
        m(2, 0) = GaussianInt(-1);
        return m;
    }();
    return C;
}

// The four generator kinds: the two Heisenberg translations, the rotation,
// and the involution.
enum class Gen { T1, T2, R, J };

inline const char* gen_name(Gen g) {
    switch (g) {
        case Gen::T1: return "T1";
        case Gen::T2: return "T2";
        case Gen::R: return "R";
        case Gen::J: return "J";
    }
    return "?";
}

// 3x3 matrix over Z[i] satisfying G* C G = C and det G = 1, both exact.
// Constructible only through verification or invariant-preserving operations.
class GroupMatrix {
public:
    // Accepts iff both invariants hold; throws membership_error otherwise,
    // with the form identity checked first.
    static GroupMatrix verify(const Mat3& m) {
        const Mat3& C = form_matrix();
        if (m.adjoint() * C * m != C)
            throw membership_error(membership_error::reason::form_violation);
        if (m.det() != GaussianInt(1))
            throw membership_error(membership_error::reason::determinant_violation);
        return GroupMatrix(m);
    }

    static GroupMatrix identity() { return GroupMatrix(Mat3::identity()); }

    static GroupMatrix generator(Gen g) {
        switch (g) {
            case Gen::T1:
                return translation(HeisenbergParam::from_gamma_r(GaussianInt(0), 1));
            case Gen::T2:
                return translation(HeisenbergParam::from_gamma_r(GaussianInt(1, 1), 0));
            case Gen::R: {
                Mat3 m;
                m(0, 0) = GaussianInt(0, 1);
                m(1, 1) = GaussianInt(-1);
                m(2, 2) = GaussianInt(0, 1);
                return GroupMatrix(std::move(m));
            }
            case Gen::J: {
                Mat3 m;
                m(0, 2) = GaussianInt(-1);
                m(1, 1) = GaussianInt(-1);
                m(2, 0) = GaussianInt(-1);
                return GroupMatrix(std::move(m));
            }
        }
        throw std::logic_error("unreachable generator kind");
    }

    // Lower-triangular unipotent matrix of the translation N_a. Only Picard
    // parameters (a2 in Z[i]) produce group elements.
    static GroupMatrix translation(const HeisenbergParam& a) {
        if (!a.is_picard())
            throw invariant_violation(
                "translation parameter is not in the Picard group (a2 not in Z[i])");
        const GaussianInt a2 = a.a2().to_gaussian();
        Mat3 m = Mat3::identity();
        m(1, 0) = a.a1();
        m(2, 0) = a2;
        m(2, 1) = conj(a.a1());
        return GroupMatrix(std::move(m));
    }

    const Mat3& mat() const { return m_; }
    const GaussianInt& operator()(int r, int c) const { return m_(r, c); }

    // Products and inverses of members are members; no recheck.
    friend GroupMatrix operator*(const GroupMatrix& a, const GroupMatrix& b) {
        return GroupMatrix(a.m_ * b.m_);
    }

    // G^-1 = C G* C, using C^2 = I.
    GroupMatrix inverse() const {
        const Mat3& C = form_matrix();
        return GroupMatrix(C * m_.adjoint() * C);
    }

    friend bool operator==(const GroupMatrix& a, const GroupMatrix& b) { return a.m_ == b.m_; }
    friend bool operator!=(const GroupMatrix& a, const GroupMatrix& b) { return !(a == b); }

    friend std::ostream& operator<<(std::ostream& os, const GroupMatrix& g) {
        return os << g.m_;
    }

private:
    explicit GroupMatrix(Mat3 m) : m_(std::move(m)) {}
    Mat3 m_;
};

inline GroupMatrix verify_membership(const Mat3& entries) { return GroupMatrix::verify(entries); }
inline GroupMatrix generator(Gen g) { return GroupMatrix::generator(g); }
inline GroupMatrix translation_matrix(const HeisenbergParam& a) {
    return GroupMatrix::translation(a);
}

// g^e by square-and-multiply; negative exponents go through the exact inverse.
inline GroupMatrix pow(const GroupMatrix& g, Int e) {
    if (e < 0) return pow(g.inverse(), -e);
    GroupMatrix acc = GroupMatrix::identity();
    GroupMatrix base = g;
    while (e > 0) {
        if (!is_even(e)) acc = acc * base;
        e >>= 1;
        if (e > 0) base = base * base;
    }
    return acc;
}

}  // namespace picard
