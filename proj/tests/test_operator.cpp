#include "bicomplex/operator.hpp"

#include "bicomplex/generators.hpp"
#include "oracles.hpp"

#include <catch2/catch.hpp>

using namespace bcx;
using oracle::TestRng;

namespace {

// T1(z1,z2,z3) = (z3+z2, z3, 0) and T2(w1,w2,w3) = (w1, 0, w3): the worked
// pair with a nilpotent and an idempotent component.
BicomplexOperator worked_operator() {
    return {ComplexMatrix{{0, 1, 1}, {0, 0, 1}, {0, 0, 0}},
            ComplexMatrix::diagonal({1, 0, 1})};
}

BicomplexVector ones3() {
    return BicomplexVector::from_components({1, 1, 1}, {1, 1, 1});
}

} // namespace

TEST_CASE("apply") {
    TestRng rng(7);

    SECTION("identity acts trivially") {
        auto v = BicomplexVector::from_components(
            {rng.complex_number(9), rng.complex_number(9), rng.complex_number(9)},
            {rng.complex_number(9), rng.complex_number(9), rng.complex_number(9)});
        CHECK(apply(BicomplexOperator::identity(3), v) == v);
    }

    SECTION("worked operator on the all-ones vector") {
        auto w = apply(worked_operator(), ones3());
        CHECK(w.minus_component() == std::vector<RationalComplex>{2, 1, 0});
        CHECK(w.plus_component() == std::vector<RationalComplex>{1, 0, 1});
    }

    SECTION("additivity on random inputs") {
        auto t = BicomplexOperator(rng.matrix(3, 3, 7), rng.matrix(3, 3, 7));
        for (int trial = 0; trial < 10; ++trial) {
            auto v = BicomplexVector::from_components(
                {rng.complex_number(7), rng.complex_number(7), rng.complex_number(7)},
                {rng.complex_number(7), rng.complex_number(7), rng.complex_number(7)});
            auto w = BicomplexVector::from_components(
                {rng.complex_number(7), rng.complex_number(7), rng.complex_number(7)},
                {rng.complex_number(7), rng.complex_number(7), rng.complex_number(7)});
            CHECK(apply(t, v + w) == apply(t, v) + apply(t, w));
        }
    }

    SECTION("apply respects the decomposition") {
        auto t = BicomplexOperator(rng.matrix(4, 4, 6), rng.matrix(4, 4, 6));
        BicomplexVector v(4);
        for (auto& e : v.entries) e = rng.scalar(6);
        auto w = apply(t, v);
        // Components computed independently as plain complex mat-vec.
        auto vm = v.minus_component();
        auto vp = v.plus_component();
        for (std::size_t i = 0; i < 4; ++i) {
            RationalComplex m, p;
            for (std::size_t j = 0; j < 4; ++j) {
                m += t.t1()(i, j) * vm[j];
                p += t.t2()(i, j) * vp[j];
            }
            CHECK(w.entries[i].minus == m);
            CHECK(w.entries[i].plus == p);
        }
    }

    CHECK_THROWS_AS(apply(BicomplexOperator::identity(3), BicomplexVector(2)), DimensionMismatch);
}

TEST_CASE("composition") {
    TestRng rng(13);
    auto t = BicomplexOperator(rng.matrix(3, 3, 7), rng.matrix(3, 3, 7));
    CHECK(compose(BicomplexOperator::identity(3), t) == t);

    SECTION("composition equals applying twice, on all standard basis vectors") {
        auto s = worked_operator();
        auto st = compose(s, t);
        for (std::size_t j = 0; j < 3; ++j) {
            BicomplexVector basis_vec(3);
            basis_vec.entries[j] = BicomplexScalar::one();
            CHECK(apply(st, basis_vec) == apply(s, apply(t, basis_vec)));
        }
    }

    SECTION("self-composition matches squared components") {
        auto tt = compose(t, t);
        CHECK(tt.t1() == t.t1() * t.t1());
        CHECK(tt.t2() == t.t2() * t.t2());
    }

    SECTION("associativity on random triples") {
        auto a = BicomplexOperator(rng.matrix(3, 3, 5), rng.matrix(3, 3, 5));
        auto b = BicomplexOperator(rng.matrix(3, 3, 5), rng.matrix(3, 3, 5));
        CHECK(compose(compose(a, b), t) == compose(a, compose(b, t)));
    }

    CHECK_THROWS_AS(compose(t, BicomplexOperator::identity(2)), DimensionMismatch);
}

TEST_CASE("operator addition and scaling") {
    TestRng rng(19);
    auto t = BicomplexOperator(rng.matrix(3, 3, 7), rng.matrix(3, 3, 7));
    CHECK(add(t, BicomplexOperator::zero(3)) == t);
    CHECK(scale(RationalComplex::one(), t) == t);

    SECTION("scaling acts entrywise on components") {
        auto doubled = scale(RationalComplex(2), t);
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j) {
                CHECK(doubled.t1()(i, j) == RationalComplex(2) * t.t1()(i, j));
                CHECK(doubled.t2()(i, j) == RationalComplex(2) * t.t2()(i, j));
            }
    }

    CHECK_THROWS_AS(add(t, BicomplexOperator::zero(2)), DimensionMismatch);
}

TEST_CASE("operator power") {
    TestRng rng(23);
    auto t = BicomplexOperator(rng.matrix(3, 3, 6), rng.matrix(3, 3, 6));
    CHECK(power(t, 1) == t);
    CHECK(power(t, 0) == BicomplexOperator::identity(3));

    SECTION("worked operator: T^3 kills t1 and fixes t2") {
        auto w = worked_operator();
        auto cubed = power(w, 3);
        CHECK(cubed.t1().is_zero());
        CHECK(cubed.t2() == w.t2());
    }

    SECTION("power equals iterated composition") {
        auto acc = BicomplexOperator::identity(3);
        for (unsigned k = 0; k <= 6; ++k) {
            CHECK(power(t, k) == acc);
            acc = compose(acc, t);
        }
    }
}

TEST_CASE("powers_equal") {
    TestRng rng(29);
    auto t = BicomplexOperator(rng.matrix(3, 3, 6), rng.matrix(3, 3, 6));
    CHECK(powers_equal(t, t, 4));

    SECTION("swapped components differ at k = 1") {
        auto w = worked_operator();
        auto swapped = BicomplexOperator(w.t2(), w.t1());
        CHECK_FALSE(powers_equal(w, swapped, 1));
    }

    SECTION("two distinct nilpotents agree at their common vanishing power") {
        auto a = BicomplexOperator(ComplexMatrix{{0, 1}, {0, 0}}, ComplexMatrix::zero(2, 2));
        auto b = BicomplexOperator(ComplexMatrix{{0, 0}, {1, 0}}, ComplexMatrix::zero(2, 2));
        CHECK(a != b);
        CHECK_FALSE(powers_equal(a, b, 1));
        CHECK(powers_equal(a, b, 2));
        CHECK(power(a, 2).is_zero());
    }

    SECTION("agrees with comparing full powers") {
        auto s = BicomplexOperator(rng.matrix(3, 3, 6), rng.matrix(3, 3, 6));
        for (unsigned k = 1; k <= 4; ++k)
            CHECK(powers_equal(s, t, k) == (power(s, k) == power(t, k)));
    }

    CHECK_THROWS_AS(powers_equal(t, BicomplexOperator::identity(2), 2), DimensionMismatch);
}

TEST_CASE("matrix_in_basis") {
    auto w = worked_operator();

    SECTION("standard basis returns the component pair") {
        CHECK(matrix_in_basis(w, Basis::standard(3)) == w.to_matrix());
    }

    SECTION("similarity preserves nilpotency index and idempotency") {
        Basis b(ComplexMatrix{{1, 1, 0}, {0, 1, 2}, {1, 0, 1}});

        auto nil = BicomplexOperator(ComplexMatrix{{0, 1, 0}, {0, 0, 1}, {0, 0, 0}},
                                     ComplexMatrix{{0, 1, 0}, {0, 0, 0}, {0, 0, 0}});
        auto standard_report = is_nilpotent_operator(nil);
        auto changed_report = nilpotency(matrix_in_basis(nil, b));
        REQUIRE(standard_report.is_nilpotent);
        CHECK(changed_report.is_nilpotent);
        CHECK(changed_report.index == standard_report.index);

        auto idem = BicomplexOperator(ComplexMatrix::diagonal({1, 0, 1}), ComplexMatrix::diagonal({0, 1, 0}));
        REQUIRE(is_idempotent_operator(idem));
        CHECK(is_idempotent(matrix_in_basis(idem, b)));
    }

    SECTION("singular basis candidates are rejected eagerly") {
        CHECK_THROWS_AS(Basis(ComplexMatrix::diagonal({1, 0, 1})), SingularBasis);
        CHECK_THROWS_AS(Basis(ComplexMatrix(2, 3)), NotSquare);
    }

    CHECK_THROWS_AS(matrix_in_basis(w, Basis::standard(2)), DimensionMismatch);
}

TEST_CASE("sum of annihilating idempotent operators is idempotent") {
    for (std::uint64_t seed = 0; seed < 6; ++seed) {
        auto [pm, rm] = gen_complementary_idempotents(seed, 4, 2, 1);
        auto [pp, rp] = gen_complementary_idempotents(seed + 100, 4, 1, 2);
        BicomplexOperator s(pm, pp);
        BicomplexOperator t(rm, rp);
        REQUIRE(is_idempotent_operator(s));
        REQUIRE(is_idempotent_operator(t));
        REQUIRE(compose(s, t).is_zero());
        REQUIRE(compose(t, s).is_zero());
        CHECK(is_idempotent_operator(add(s, t)));
    }
}

TEST_CASE("operator predicates delegate to the matrix layer") {
    SECTION("worked operator") {
        auto w = worked_operator();
        auto nil = is_nilpotent_operator(w);
        CHECK_FALSE(nil.is_nilpotent);
        CHECK(nilpotency_index(w.t1()) == 3);
        CHECK(w.t2() * w.t2() == w.t2());
        auto sing = is_singular_operator(w);
        CHECK(sing.is_singular);
        CHECK(sing.minus_singular);
        CHECK(sing.plus_singular);
        CHECK_FALSE(is_idempotent_operator(w));
    }

    SECTION("zero operator") {
        auto z = BicomplexOperator::zero(3);
        auto nil = is_nilpotent_operator(z);
        CHECK(nil.is_nilpotent);
        CHECK(nil.index == 1);
        CHECK(is_idempotent_operator(z));
        CHECK(is_singular_operator(z).is_singular);
    }

    SECTION("equality and zero transfer componentwise") {
        TestRng rng(31);
        auto t = BicomplexOperator(rng.matrix(3, 3, 6), rng.matrix(3, 3, 6));
        CHECK(t == BicomplexOperator(t.t1(), t.t2()));
        CHECK(t != BicomplexOperator(t.t1(), t.t1() + t.t2()));
        CHECK(BicomplexOperator(ComplexMatrix::zero(3, 3), ComplexMatrix::zero(3, 3)).is_zero());
    }
}
