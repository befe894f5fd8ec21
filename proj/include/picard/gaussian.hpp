#pragma once

#include <ostream>
#include <string>
#include <utility>

#include "picard/integers.hpp"

namespace picard {

// Element of Z[i].
struct GaussianInt {
    Int re{0};
    Int im{0};

    GaussianInt() = default;
    GaussianInt(Int r) : re(std::move(r)) {}  // NOLINT: implicit from Int is intended
    GaussianInt(Int r, Int i) : re(std::move(r)), im(std::move(i)) {}

    bool is_zero() const { return re == 0 && im == 0; }

    friend GaussianInt operator+(const GaussianInt& a, const GaussianInt& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend GaussianInt operator-(const GaussianInt& a, const GaussianInt& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend GaussianInt operator-(const GaussianInt& a) { return {-a.re, -a.im}; }
    friend GaussianInt operator*(const GaussianInt& a, const GaussianInt& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    GaussianInt& operator+=(const GaussianInt& b) { return *this = *this + b; }
    GaussianInt& operator-=(const GaussianInt& b) { return *this = *this - b; }
    GaussianInt& operator*=(const GaussianInt& b) { return *this = *this * b; }

    friend bool operator==(const GaussianInt& a, const GaussianInt& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const GaussianInt& a, const GaussianInt& b) { return !(a == b); }

    friend std::ostream& operator<<(std::ostream& os, const GaussianInt& z) {
        os << z.re;
        os << (z.im < 0 ? "-" : "+");
        Int a = z.im < 0 ? Int(-z.im) : z.im;
        return os << a << "i";
    }
};

inline GaussianInt conj(const GaussianInt& z) { return {z.re, -z.im}; }

inline Int norm(const GaussianInt& z) { return z.re * z.re + z.im * z.im; }

// i^e for e taken mod 4.
inline GaussianInt unit_i_pow(int e) {
    switch (((e % 4) + 4) % 4) {
        case 0: return GaussianInt(1);
        case 1: return GaussianInt(0, 1);
        case 2: return GaussianInt(-1);
        default: return GaussianInt(0, -1);
    }
}

inline std::string to_string(const GaussianInt& z) {
    std::string s = z.re.str();
    s += z.im < 0 ? "-" : "+";
    s += (z.im < 0 ? Int(-z.im) : z.im).str();
    s += "i";
    return s;
}

}  // namespace picard
