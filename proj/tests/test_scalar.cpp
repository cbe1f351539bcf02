#include "bicomplex/scalar.hpp"

#include "oracles.hpp"

#include <catch2/catch.hpp>

using namespace bcx;
using oracle::Quad;
using oracle::TestRng;

namespace {
const BicomplexScalar e1 = BicomplexScalar::e1();
const BicomplexScalar e2 = BicomplexScalar::e2();
const RationalComplex I = RationalComplex::i();
} // namespace

TEST_CASE("idempotent unit identities") {
    CHECK(e1 + e2 == BicomplexScalar::one());
    CHECK(e1 * e2 == BicomplexScalar::zero());
    CHECK(e2 * e1 == BicomplexScalar::zero());
    for (unsigned k = 1; k <= 10; ++k) {
        CHECK(pow(e1, k) == e1);
        CHECK(pow(e2, k) == e2);
    }
}

TEST_CASE("from_cartesian_pair") {
    SECTION("real unit has equal components") {
        auto x = BicomplexScalar::from_cartesian_pair(RationalComplex::one(), RationalComplex::zero());
        CHECK(x == BicomplexScalar::one());
    }
    SECTION("i2 decomposes as (-i1, i1)") {
        auto x = BicomplexScalar::from_cartesian_pair(RationalComplex::zero(), RationalComplex::one());
        CHECK(x.minus == -I);
        CHECK(x.plus == I);
        // Four-coefficient oracle: recombining the components through the
        // cartesian algebra must reproduce i2 = (0,0,1,0).
        Quad expected{Rational(0), Rational(0), Rational(1), Rational(0)};
        CHECK(oracle::recombine(x.minus, x.plus) == expected);
        CHECK(x == BicomplexScalar::unit_i2());
    }
    SECTION("i1*i2 decomposes as (1, -1)") {
        auto x = BicomplexScalar::from_cartesian_pair(RationalComplex::zero(), I);
        CHECK(x.minus == RationalComplex::one());
        CHECK(x.plus == -RationalComplex::one());
        Quad expected{Rational(0), Rational(0), Rational(0), Rational(1)};
        CHECK(oracle::recombine(x.minus, x.plus) == expected);
        CHECK(x == BicomplexScalar::unit_i1i2());
    }
}

TEST_CASE("to_cartesian_pair") {
    SECTION("one") {
        auto [z1, z2] = BicomplexScalar::one().to_cartesian_pair();
        CHECK(z1 == RationalComplex::one());
        CHECK(z2 == RationalComplex::zero());
    }
    SECTION("e1 in cartesian form is (1 + i1 i2)/2") {
        auto [z1, z2] = e1.to_cartesian_pair();
        CHECK(z1 == RationalComplex(Rational(1, 2), Rational(0)));
        CHECK(z2 == RationalComplex(Rational(0), Rational(1, 2)));
    }
    SECTION("round trip of the i2 decomposition") {
        auto [z1, z2] = BicomplexScalar(-I, I).to_cartesian_pair();
        CHECK(z1 == RationalComplex::zero());
        CHECK(z2 == RationalComplex::one());
    }
}

TEST_CASE("from_real_quad") {
    CHECK(BicomplexScalar::from_real_quad(1, 0, 0, 0) == BicomplexScalar::one());
    CHECK(BicomplexScalar::from_real_quad(Rational(1, 2), 0, 0, Rational(1, 2)) == e1);
    CHECK(BicomplexScalar::from_real_quad(Rational(1, 2), 0, 0, Rational(-1, 2)) == e2);
}

TEST_CASE("addition") {
    TestRng rng(11);
    BicomplexScalar x = rng.scalar(9);
    CHECK(x + BicomplexScalar::zero() == x);

    BicomplexScalar a{RationalComplex(2), RationalComplex(3)};
    BicomplexScalar b{RationalComplex(-2), RationalComplex(5)};
    BicomplexScalar sum = a + b;
    CHECK(sum == BicomplexScalar(RationalComplex(0), RationalComplex(8)));
    CHECK(classify(sum) == ScalarClass::ZeroDivisor);
}

TEST_CASE("multiplication") {
    SECTION("orthogonality and idempotency of units") {
        CHECK(e1 * e2 == BicomplexScalar::zero());
        CHECK(e1 * e1 == e1);
    }
    SECTION("i2 squared is -1") {
        BicomplexScalar i2 = BicomplexScalar::unit_i2();
        CHECK(i2 * i2 == -BicomplexScalar::one());
        // Same product through the brute-force cartesian expansion.
        Quad q = oracle::to_quad(i2);
        CHECK(oracle::quad_mul(q, q) == oracle::to_quad(-BicomplexScalar::one()));
    }
    SECTION("componentwise product agrees with the cartesian oracle") {
        TestRng rng(23);
        for (int trial = 0; trial < 50; ++trial) {
            BicomplexScalar a = rng.scalar(7);
            BicomplexScalar b = rng.scalar(7);
            CHECK(oracle::to_quad(a * b) == oracle::quad_mul(oracle::to_quad(a), oracle::to_quad(b)));
        }
    }
}

TEST_CASE("pow") {
    CHECK(pow(e1, 7) == e1);

    TestRng rng(5);
    BicomplexScalar x = rng.scalar(9);
    CHECK(pow(x, 1) == x);
    CHECK(pow(x, 0) == BicomplexScalar::one());

    BicomplexScalar y{RationalComplex(2), RationalComplex(3)};
    CHECK(pow(y, 2) == BicomplexScalar(RationalComplex(4), RationalComplex(9)));

    SECTION("pow equals repeated multiplication") {
        for (int trial = 0; trial < 10; ++trial) {
            BicomplexScalar z = rng.scalar(5);
            BicomplexScalar acc = BicomplexScalar::one();
            for (unsigned k = 0; k <= 6; ++k) {
                CHECK(pow(z, k) == acc);
                acc *= z;
            }
        }
    }
}

TEST_CASE("classify") {
    CHECK(classify(e1) == ScalarClass::ZeroDivisor);
    CHECK(classify(BicomplexScalar::zero()) == ScalarClass::Zero);

    // 1 + i2 has components 1 -+ i1, both nonzero.
    auto x = BicomplexScalar::from_cartesian_pair(RationalComplex::one(), RationalComplex::one());
    CHECK(x.minus == RationalComplex(Rational(1), Rational(-1)));
    CHECK(x.plus == RationalComplex(Rational(1), Rational(1)));
    CHECK(classify(x) == ScalarClass::Invertible);
}

TEST_CASE("inverse") {
    CHECK(inverse(BicomplexScalar::one()) == BicomplexScalar::one());

    BicomplexScalar x{RationalComplex(Rational(2), Rational(0)), RationalComplex(Rational(1, 2), Rational(0))};
    BicomplexScalar xi = inverse(x);
    CHECK(xi == BicomplexScalar(RationalComplex(Rational(1, 2), Rational(0)), RationalComplex(Rational(2), Rational(0))));
    CHECK(x * xi == BicomplexScalar::one());

    SECTION("zero divisors are rejected, carrying the class") {
        try {
            inverse(e1);
            FAIL("expected NotInvertible");
        } catch (const NotInvertible& err) {
            CHECK(err.scalar_class == ScalarClass::ZeroDivisor);
        }
        try {
            inverse(BicomplexScalar::zero());
            FAIL("expected NotInvertible");
        } catch (const NotInvertible& err) {
            CHECK(err.scalar_class == ScalarClass::Zero);
        }
    }
}

TEST_CASE("cartesian round trip on random rational quads") {
    TestRng rng(71);
    for (int trial = 0; trial < 200; ++trial) {
        Rational u1 = rng.rational(12), u2 = rng.rational(12);
        Rational u3 = rng.rational(12), u4 = rng.rational(12);
        BicomplexScalar x = BicomplexScalar::from_real_quad(u1, u2, u3, u4);
        auto [z1, z2] = x.to_cartesian_pair();
        CHECK(BicomplexScalar::from_cartesian_pair(z1, z2) == x);
        auto u = x.to_real_quad();
        CHECK(u[0] == u1);
        CHECK(u[1] == u2);
        CHECK(u[2] == u3);
        CHECK(u[3] == u4);
    }
}

TEST_CASE("ring laws on random scalars") {
    TestRng rng(101);
    for (int trial = 0; trial < 40; ++trial) {
        BicomplexScalar a = rng.scalar(8), b = rng.scalar(8), c = rng.scalar(8);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a + b == b + a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * b == b * a);
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a - a == BicomplexScalar::zero());
    }
}

TEST_CASE("opposite zero divisors annihilate") {
    TestRng rng(31);
    for (int trial = 0; trial < 25; ++trial) {
        RationalComplex p = rng.complex_number(9);
        RationalComplex m = rng.complex_number(9);
        BicomplexScalar a{RationalComplex::zero(), p}; // minus = 0
        BicomplexScalar b{m, RationalComplex::zero()}; // plus = 0
        CHECK(classify(a * b) == ScalarClass::Zero);
    }
}

TEST_CASE("inverse is two-sided on random invertible scalars") {
    TestRng rng(47);
    int checked = 0;
    while (checked < 30) {
        BicomplexScalar x = rng.scalar(9);
        if (classify(x) != ScalarClass::Invertible) continue;
        ++checked;
        CHECK(x * inverse(x) == BicomplexScalar::one());
        CHECK(inverse(x) * x == BicomplexScalar::one());
    }
}
