#pragma once

#include <cctype>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "picard/matrix.hpp"

namespace picard {

// One factor of a generator word. J carries no meaningful exponent in the
// text format; library-produced J tokens always have exponent 1.
struct GeneratorToken {
    Gen kind;
    Int exponent;

    friend bool operator==(const GeneratorToken& a, const GeneratorToken& b) {
        return a.kind == b.kind && a.exponent == b.exponent;
    }
    friend bool operator!=(const GeneratorToken& a, const GeneratorToken& b) {
        return !(a == b);
    }
};

// Product expression over the four generators; leftmost token is the
// leftmost matrix factor.
struct GeneratorWord {
    std::vector<GeneratorToken> tokens;

    bool empty() const { return tokens.empty(); }
    std::size_t size() const { return tokens.size(); }

    friend bool operator==(const GeneratorWord& a, const GeneratorWord& b) {
        return a.tokens == b.tokens;
    }
    friend bool operator!=(const GeneratorWord& a, const GeneratorWord& b) {
        return !(a == b);
    }
};

// Text format: whitespace-separated tokens T1^e, T2^e, R^e, J with decimal
// integer exponents; the empty string is the identity.
inline std::string format_word(const GeneratorWord& w) {
    std::string out;
    for (const GeneratorToken& t : w.tokens) {
        if (!out.empty()) out += ' ';
        out += gen_name(t.kind);
        if (t.kind != Gen::J) {
            out += '^';
            out += t.exponent.str();
        }
    }
    return out;
}

namespace detail {

inline Int parse_exponent(std::string_view tok, std::string_view digits) {
    if (digits.empty() || digits == "-")
        throw word_parse_error("malformed exponent in token '" + std::string(tok) + "'");
    std::size_t i = digits.front() == '-' ? 1 : 0;
    for (; i < digits.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(digits[i])))
            throw word_parse_error("malformed exponent in token '" + std::string(tok) + "'");
    return Int(std::string(digits));
}

inline GeneratorToken parse_token(std::string_view tok) {
    if (tok == "J") return {Gen::J, Int(1)};
    const std::size_t caret = tok.find('^');
    const std::string_view head = tok.substr(0, caret);
    if (head == "J")
        throw word_parse_error("token 'J' takes no exponent");
    Gen kind;
    if (head == "T1")
        kind = Gen::T1;
    else if (head == "T2")
        kind = Gen::T2;
    else if (head == "R")
        kind = Gen::R;
    else
        throw word_parse_error("unknown token '" + std::string(tok) + "'");
    if (caret == std::string_view::npos)
        throw word_parse_error("token '" + std::string(tok) + "' is missing an exponent");
    return {kind, parse_exponent(tok, tok.substr(caret + 1))};
}

}  // namespace detail

inline GeneratorWord parse_word(std::string_view text) {
    GeneratorWord w;
    std::size_t i = 0;
    while (i < text.size()) {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
        std::size_t j = i;
        while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j]))) ++j;
        if (j > i) w.tokens.push_back(detail::parse_token(text.substr(i, j - i)));
        i = j;
    }
    return w;
}

// Applies only the local relations J^2 = 1, R^4 = 1 and merging of adjacent
// equal-kind tokens. The result has no zero exponents, no adjacent tokens of
// the same kind, R exponents in {1,2,3}, and single J tokens only. A stack
// pass keeps that invariant through cascaded cancellations, so the function
// is idempotent.
inline GeneratorWord normalize(const GeneratorWord& w) {
    std::vector<GeneratorToken> out;
    auto reduced = [](Gen kind, Int e) -> Int {
        if (kind == Gen::R) return ((e % 4) + 4) % 4;
        if (kind == Gen::J) return ((e % 2) + 2) % 2;
        return e;
    };
    for (const GeneratorToken& t : w.tokens) {
        Int e = t.exponent;
        while (!out.empty() && out.back().kind == t.kind) {
            e += out.back().exponent;
            out.pop_back();
        }
        e = reduced(t.kind, e);
        if (e != 0) out.push_back({t.kind, std::move(e)});
    }
    return GeneratorWord{std::move(out)};
}

// Exact product of the word's factors; negative exponents use the exact
// generator inverses.
inline GroupMatrix evaluate(const GeneratorWord& w) {
    GroupMatrix acc = GroupMatrix::identity();
    for (const GeneratorToken& t : w.tokens) acc = acc * pow(generator(t.kind), t.exponent);
    return acc;
}

}  // namespace picard
