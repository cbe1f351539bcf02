// Text rendering and parsing of bicomplex scalars.
//
// Two interchangeable forms:
//   cartesian:  "u1 + u2 i1 + u3 i2 + u4 i1i2"   rationals as "p/q"
//   idempotent: "[a+bi | c+di]"                   one complex per component
#pragma once

#include "bicomplex/errors.hpp"
#include "bicomplex/scalar.hpp"

#include <cstddef>
#include <string>
#include <string_view>

namespace bcx {

inline std::string to_cartesian_string(const BicomplexScalar& x) {
    auto u = x.to_real_quad();
    return u[0].to_string() + " + " + u[1].to_string() + " i1 + " + u[2].to_string() +
           " i2 + " + u[3].to_string() + " i1i2";
}

inline std::string to_idempotent_string(const BicomplexScalar& x) {
    return "[" + x.minus.to_string() + " | " + x.plus.to_string() + "]";
}

namespace detail {

struct TextCursor {
    std::string_view text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
    }
    bool done() {
        skip_ws();
        return pos >= text.size();
    }
    char peek() { return text[pos]; }
    bool consume(char c) {
        skip_ws();
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    bool consume_word(std::string_view w) {
        skip_ws();
        if (text.substr(pos, w.size()) == w) {
            pos += w.size();
            return true;
        }
        return false;
    }

    [[noreturn]] void fail(const std::string& what) {
        throw ParseError(what, "at offset " + std::to_string(pos) + " in \"" + std::string(text) + "\"");
    }

    // Unsigned rational "p" or "p/q".
    Rational rational() {
        skip_ws();
        std::size_t start = pos;
        while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') ++pos;
        if (pos == start) fail("expected a number");
        std::string_view token = text.substr(start, pos - start);
        if (pos < text.size() && text[pos] == '/') {
            ++pos;
            std::size_t dstart = pos;
            while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') ++pos;
            if (pos == dstart) fail("expected a denominator");
            token = text.substr(start, pos - start);
        }
        auto r = Rational::from_string(token);
        if (!r) fail("bad rational \"" + std::string(token) + "\"");
        return *r;
    }

    // Signed complex "a", "a+bi", "a-bi", "bi" with rational parts.
    RationalComplex complex_number() {
        int sign = 1;
        if (consume('-')) sign = -1;
        else consume('+');
        Rational first = rational();
        if (consume('i')) return RationalComplex(Rational(0), sign < 0 ? -first : first);
        RationalComplex z(sign < 0 ? -first : first, Rational(0));
        skip_ws();
        if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
            int isign = text[pos] == '-' ? -1 : 1;
            ++pos;
            Rational imag = rational();
            if (!consume('i')) fail("expected 'i' after imaginary part");
            z.im = isign < 0 ? -imag : imag;
        }
        return z;
    }
};

} // namespace detail

// Parses either scalar form; idempotent when the text starts with '['.
inline BicomplexScalar parse_scalar(std::string_view text) {
    detail::TextCursor cur{text};
    cur.skip_ws();
    if (cur.done()) throw ParseError("empty scalar string");

    if (cur.peek() == '[') {
        cur.consume('[');
        RationalComplex minus = cur.complex_number();
        if (!cur.consume('|')) cur.fail("expected '|' between idempotent components");
        RationalComplex plus = cur.complex_number();
        if (!cur.consume(']')) cur.fail("expected closing ']'");
        if (!cur.done()) cur.fail("trailing characters after scalar");
        return {minus, plus};
    }

    // Cartesian: a signed sum of terms, each a rational with an optional
    // unit suffix i1 | i2 | i1i2 (longest match first). Units may repeat;
    // coefficients accumulate.
    Rational u[4];
    bool first_term = true;
    while (!cur.done()) {
        int sign = 1;
        if (cur.consume('-')) {
            sign = -1;
        } else if (cur.consume('+')) {
            if (cur.consume('-')) sign = -1; // rendered negatives look like "+ -3 i1"
        } else if (!first_term) {
            cur.fail("expected '+' or '-' between terms");
        }
        first_term = false;

        Rational coeff;
        cur.skip_ws();
        if (!cur.done() && cur.peek() == 'i') {
            coeff = Rational(1); // bare unit, e.g. "i1"
        } else {
            coeff = cur.rational();
        }
        if (sign < 0) coeff = -coeff;

        if (cur.consume_word("i1i2")) u[3] += coeff;
        else if (cur.consume_word("i1")) u[1] += coeff;
        else if (cur.consume_word("i2")) u[2] += coeff;
        else u[0] += coeff;
    }
    return BicomplexScalar::from_real_quad(u[0], u[1], u[2], u[3]);
}

} // namespace bcx
