// Bicomplex scalars stored in idempotent coordinates (xi-, xi+).
//
// Every bicomplex number xi = z1 + i2*z2 decomposes uniquely as
// xi = xi^- e1 + xi^+ e2 with complex xi^- = z1 - i1*z2, xi^+ = z1 + i1*z2,
// where e1 = (1 + i1*i2)/2 and e2 = (1 - i1*i2)/2. All ring operations act
// componentwise in these coordinates, which is why they are the canonical
// representation here; cartesian forms are conversion views.
#pragma once

#include "bicomplex/errors.hpp"
#include "bicomplex/rational_complex.hpp"

#include <array>
#include <ostream>
#include <string>
#include <utility>

namespace bcx {

// Partition of C2: invertible elements, zero, and the zero divisors
// (nonzero numbers with exactly one vanishing idempotent component).
enum class ScalarClass { Zero, Invertible, ZeroDivisor };

inline const char* to_string(ScalarClass c) {
    switch (c) {
        case ScalarClass::Zero: return "zero";
        case ScalarClass::Invertible: return "invertible";
        case ScalarClass::ZeroDivisor: return "zero_divisor";
    }
    return "?";
}

class NotInvertible : public Error {
public:
    explicit NotInvertible(ScalarClass c)
        : Error(std::string("scalar is not invertible: ") + to_string(c)), scalar_class(c) {}

    ScalarClass scalar_class;
};

struct BicomplexScalar {
    RationalComplex minus; // coefficient of e1
    RationalComplex plus;  // coefficient of e2

    BicomplexScalar() = default;
    BicomplexScalar(RationalComplex m, RationalComplex p)
        : minus(std::move(m)), plus(std::move(p)) {}
    BicomplexScalar(long n) : minus(n), plus(n) {} // NOLINT(google-explicit-constructor)

    static BicomplexScalar zero() { return {}; }
    static BicomplexScalar one() { return BicomplexScalar(1); }
    static BicomplexScalar e1() { return {RationalComplex::one(), RationalComplex::zero()}; }
    static BicomplexScalar e2() { return {RationalComplex::zero(), RationalComplex::one()}; }
    static BicomplexScalar unit_i1() { return {RationalComplex::i(), RationalComplex::i()}; }
    static BicomplexScalar unit_i2() { return {-RationalComplex::i(), RationalComplex::i()}; }
    static BicomplexScalar unit_i1i2() { return {RationalComplex::one(), -RationalComplex::one()}; }

    // xi = z1 + i2*z2  ->  (z1 - i1*z2, z1 + i1*z2)
    static BicomplexScalar from_cartesian_pair(const RationalComplex& z1, const RationalComplex& z2) {
        RationalComplex rot = z2.times_i();
        return {z1 - rot, z1 + rot};
    }

    // xi = u1 + i1*u2 + i2*u3 + i1*i2*u4
    static BicomplexScalar from_real_quad(const Rational& u1, const Rational& u2,
                                          const Rational& u3, const Rational& u4) {
        return from_cartesian_pair(RationalComplex(u1, u2), RationalComplex(u3, u4));
    }

    // Inverse of from_cartesian_pair: z1 = (m+p)/2, z2 = i1*(m-p)/2.
    std::pair<RationalComplex, RationalComplex> to_cartesian_pair() const {
        Rational half(1, 2);
        RationalComplex z1(half * (minus.re + plus.re), half * (minus.im + plus.im));
        RationalComplex z2 = (minus - plus).times_i();
        return {z1, RationalComplex(half * z2.re, half * z2.im)};
    }

    std::array<Rational, 4> to_real_quad() const {
        auto [z1, z2] = to_cartesian_pair();
        return {z1.re, z1.im, z2.re, z2.im};
    }

    bool is_zero() const { return minus.is_zero() && plus.is_zero(); }

    BicomplexScalar operator-() const { return {-minus, -plus}; }

    BicomplexScalar& operator+=(const BicomplexScalar& o) {
        minus += o.minus;
        plus += o.plus;
        return *this;
    }
    BicomplexScalar& operator-=(const BicomplexScalar& o) {
        minus -= o.minus;
        plus -= o.plus;
        return *this;
    }
    BicomplexScalar& operator*=(const BicomplexScalar& o) {
        minus *= o.minus;
        plus *= o.plus;
        return *this;
    }

    friend BicomplexScalar operator+(BicomplexScalar a, const BicomplexScalar& b) { a += b; return a; }
    friend BicomplexScalar operator-(BicomplexScalar a, const BicomplexScalar& b) { a -= b; return a; }
    friend BicomplexScalar operator*(BicomplexScalar a, const BicomplexScalar& b) { a *= b; return a; }

    friend bool operator==(const BicomplexScalar& a, const BicomplexScalar& b) {
        return a.minus == b.minus && a.plus == b.plus;
    }
    friend bool operator!=(const BicomplexScalar& a, const BicomplexScalar& b) { return !(a == b); }

    friend std::ostream& operator<<(std::ostream& os, const BicomplexScalar& x) {
        return os << "[" << x.minus << " | " << x.plus << "]";
    }
};

inline ScalarClass classify(const BicomplexScalar& x) {
    bool m0 = x.minus.is_zero();
    bool p0 = x.plus.is_zero();
    if (m0 && p0) return ScalarClass::Zero;
    if (m0 || p0) return ScalarClass::ZeroDivisor;
    return ScalarClass::Invertible;
}

inline BicomplexScalar pow(const BicomplexScalar& x, unsigned long k) {
    BicomplexScalar result = BicomplexScalar::one();
    BicomplexScalar base = x;
    while (k > 0) {
        if (k & 1) result *= base;
        k >>= 1;
        if (k > 0) base *= base;
    }
    return result;
}

// Throws NotInvertible (carrying the class) unless classify(x) == Invertible.
inline BicomplexScalar inverse(const BicomplexScalar& x) {
    ScalarClass c = classify(x);
    if (c != ScalarClass::Invertible) throw NotInvertible(c);
    return {x.minus.inverse(), x.plus.inverse()};
}

} // namespace bcx
