// Exact complex numbers over the rationals: the component field C1.
#pragma once

#include "bicomplex/rational.hpp"

#include <ostream>
#include <string>

namespace bcx {

// A complex number with rational real and imaginary parts. Forms a field:
// every nonzero element has an exact inverse.
struct RationalComplex {
    Rational re;
    Rational im;

    RationalComplex() = default;
    RationalComplex(Rational real, Rational imag) : re(std::move(real)), im(std::move(imag)) {}
    RationalComplex(long real) : re(real) {} // NOLINT(google-explicit-constructor)

    static RationalComplex zero() { return {}; }
    static RationalComplex one() { return RationalComplex(1); }
    static RationalComplex i() { return RationalComplex(Rational(0), Rational(1)); }

    bool is_zero() const { return re.is_zero() && im.is_zero(); }

    // Multiplication by the imaginary unit: (a, b) -> (-b, a).
    RationalComplex times_i() const { return RationalComplex(-im, re); }

    RationalComplex conj() const { return RationalComplex(re, -im); }

    // |z|^2 as an exact rational; zero iff z is zero.
    Rational norm2() const { return re * re + im * im; }

    RationalComplex operator-() const { return RationalComplex(-re, -im); }

    RationalComplex& operator+=(const RationalComplex& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    RationalComplex& operator-=(const RationalComplex& o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    RationalComplex& operator*=(const RationalComplex& o) {
        Rational r = re * o.re - im * o.im;
        im = re * o.im + im * o.re;
        re = std::move(r);
        return *this;
    }

    friend RationalComplex operator+(RationalComplex a, const RationalComplex& b) { a += b; return a; }
    friend RationalComplex operator-(RationalComplex a, const RationalComplex& b) { a -= b; return a; }
    friend RationalComplex operator*(RationalComplex a, const RationalComplex& b) { a *= b; return a; }

    friend bool operator==(const RationalComplex& a, const RationalComplex& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const RationalComplex& a, const RationalComplex& b) { return !(a == b); }

    // Pre: nonzero. Exact inverse conj(z)/|z|^2.
    RationalComplex inverse() const {
        Rational n = norm2();
        return RationalComplex(re / n, -im / n);
    }

    friend RationalComplex operator/(const RationalComplex& a, const RationalComplex& b) {
        return a * b.inverse();
    }

    // "a+bi" / "a-bi", both parts always present.
    std::string to_string() const {
        return re.to_string() + (im.sign() < 0 ? "-" : "+") + abs(im).to_string() + "i";
    }

    friend std::ostream& operator<<(std::ostream& os, const RationalComplex& z) {
        return os << z.to_string();
    }
};

inline RationalComplex operator*(const Rational& s, const RationalComplex& z) {
    return RationalComplex(s * z.re, s * z.im);
}

} // namespace bcx
