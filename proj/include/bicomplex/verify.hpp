// The theorem-verification harness behind `bcx verify`.
//
// Every check is registered as data (name, salt, per-instance runner), so a
// failing instance can be reproduced exactly: the counterexample file records
// the suite, check, instance index and root seed, and replay re-derives the
// same sub-seed and re-executes that single instance. Generated instance
// files (from `bcx generate`) replay through their certificates instead.
#pragma once

#include "bicomplex/generators.hpp"
#include "bicomplex/io.hpp"
#include "bicomplex/matrix.hpp"
#include "bicomplex/operator.hpp"

#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace bcx {

struct VerifyOptions {
    std::uint64_t seed = 1;
    std::size_t instances = 100;
    std::string counterexample_dir = ".";
};

struct CheckResult {
    std::string suite;
    std::string name; // the identity checked
    std::size_t instances = 0;
    bool passed = true;
    std::string detail;
    std::string counterexample_path;
};

namespace verify_detail {

struct InstanceFailure {
    std::string detail;
    std::vector<std::pair<std::string, BicomplexMatrix>> artifacts;
};

using InstanceFn = std::function<std::optional<InstanceFailure>(SplitMix64&, std::size_t)>;

struct CheckDef {
    std::string name;
    std::uint64_t salt;
    bool fixed_single = false; // regression checks run once regardless of --instances
    InstanceFn run;
};

inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t salt, std::uint64_t i) {
    SplitMix64 r(seed ^ (salt * 0x9e3779b97f4a7c15ULL) ^ (i * 0xbf58476d1ce4e5b9ULL));
    return r.next();
}

// --- corpus helpers -------------------------------------------------------

inline BicomplexScalar random_scalar(SplitMix64& rng, long bound) {
    auto rat = [&] { return Rational(rng.pick(-bound, bound), rng.pick(1, bound)); };
    return {RationalComplex(rat(), rat()), RationalComplex(rat(), rat())};
}

inline BicomplexMatrix random_nilpotent_pair(SplitMix64& rng, std::size_t& k1, std::size_t& k2) {
    std::size_t n = 2 + rng.below(5);
    k1 = 1 + rng.below(n);
    k2 = 1 + rng.below(n);
    return {gen_nilpotent(GenSpec::nilpotent(rng.next(), n, k1)),
            gen_nilpotent(GenSpec::nilpotent(rng.next(), n, k2))};
}

inline BicomplexMatrix random_idempotent_pair(SplitMix64& rng) {
    std::size_t n = 2 + rng.below(5);
    std::size_t r1 = rng.below(n + 1);
    std::size_t r2 = rng.below(n + 1);
    return {gen_idempotent(GenSpec::idempotent(rng.next(), n, r1)),
            gen_idempotent(GenSpec::idempotent(rng.next(), n, r2))};
}

// --- scalar suite ---------------------------------------------------------

inline std::vector<CheckDef> scalar_checks() {
    std::vector<CheckDef> defs;

    defs.push_back({"e1 + e2 = 1, e1 e2 = 0, e1^k = e1, e2^k = e2 (k <= 10)", 0x101, true,
                    [](SplitMix64&, std::size_t) -> std::optional<InstanceFailure> {
                        auto e1 = BicomplexScalar::e1();
                        auto e2 = BicomplexScalar::e2();
                        if (e1 + e2 != BicomplexScalar::one())
                            return InstanceFailure{"e1 + e2 != 1", {}};
                        if (e1 * e2 != BicomplexScalar::zero())
                            return InstanceFailure{"e1 e2 != 0", {}};
                        for (unsigned k = 1; k <= 10; ++k) {
                            if (pow(e1, k) != e1) return InstanceFailure{"e1^k != e1", {}};
                            if (pow(e2, k) != e2) return InstanceFailure{"e2^k != e2", {}};
                        }
                        return std::nullopt;
                    }});

    defs.push_back(
        {"idempotent representation round trip is the identity", 0x102, false,
         [](SplitMix64& rng, std::size_t) -> std::optional<InstanceFailure> {
             auto rat = [&] { return Rational(rng.pick(-30, 30), rng.pick(1, 30)); };
             Rational u1 = rat(), u2 = rat(), u3 = rat(), u4 = rat();
             BicomplexScalar x = BicomplexScalar::from_real_quad(u1, u2, u3, u4);
             auto [z1, z2] = x.to_cartesian_pair();
             if (BicomplexScalar::from_cartesian_pair(z1, z2) != x)
                 return InstanceFailure{"from_cartesian_pair(to_cartesian_pair(x)) != x", {}};
             auto u = x.to_real_quad();
             if (u[0] != u1 || u[1] != u2 || u[2] != u3 || u[3] != u4)
                 return InstanceFailure{"real quad round trip changed coefficients", {}};
             return std::nullopt;
         }});

    defs.push_back({"ring laws: associativity, commutativity, distributivity", 0x103, false,
                    [](SplitMix64& rng, std::size_t) -> std::optional<InstanceFailure> {
                        BicomplexScalar a = random_scalar(rng, 9);
                        BicomplexScalar b = random_scalar(rng, 9);
                        BicomplexScalar c = random_scalar(rng, 9);
                        if ((a + b) + c != a + (b + c))
                            return InstanceFailure{"(a+b)+c != a+(b+c)", {}};
                        if (a * b != b * a) return InstanceFailure{"ab != ba", {}};
                        if ((a * b) * c != a * (b * c))
                            return InstanceFailure{"(ab)c != a(bc)", {}};
                        if (a * (b + c) != a * b + a * c)
                            return InstanceFailure{"a(b+c) != ab+ac", {}};
                        return std::nullopt;
                    }});

    defs.push_back({"zero divisors with opposite vanishing components annihilate", 0x104, false,
                    [](SplitMix64& rng, std::size_t) -> std::optional<InstanceFailure> {
                        BicomplexScalar a{RationalComplex::zero(),
                                          random_scalar(rng, 9).plus};
                        BicomplexScalar b{random_scalar(rng, 9).minus,
                                          RationalComplex::zero()};
                        if (classify(a * b) != ScalarClass::Zero)
                            return InstanceFailure{"product of opposite zero divisors != 0", {}};
                        return std::nullopt;
                    }});

    defs.push_back({"x * inverse(x) = 1 for every invertible x", 0x105, false,
                    [](SplitMix64& rng, std::size_t) -> std::optional<InstanceFailure> {
                        BicomplexScalar x = random_scalar(rng, 9);
                        if (classify(x) != ScalarClass::Invertible) return std::nullopt;
                        if (x * inverse(x) != BicomplexScalar::one())
                            return InstanceFailure{"x * inverse(x) != 1", {}};
                        return std::nullopt;
                    }});

    return defs;
}

// --- nilpotent suite ------------------------------------------------------

inline std::vector<CheckDef> nilpotent_checks() {
    std::vector<CheckDef> defs;

    defs.push_back(
        {"T^k = e1 T1^k + e2 T2^k and equals the iterated product", 0x201, false,
         [](SplitMix64& rng, std::size_t) -> std::optional<InstanceFailure> {
             std::size_t n = 2 + rng.below(4);
             BicomplexMatrix a{gen_arbitrary(GenSpec::arbitrary(rng.next(), n, 6)),
                               gen_arbitrary(GenSpec::arbitrary(rng.next(), n, 6))};
             unsigned k = 1 + static_cast<unsigned>(rng.below(8));
             BicomplexMatrix p = power(a, k);
             if (p != BicomplexMatrix::compose(power(a.minus(), k), power(a.plus(), k)))
                 return InstanceFailure{"T^k != e1 T1^k + e2 T2^k", {{"instance", a}}};
             BicomplexMatrix it = BicomplexMatrix::identity(n);
             for (unsigned s = 0; s < k; ++s) it = it * a;
             if (p != it) return InstanceFailure{"T^k != k-fold product", {{"instance", a}}};
             return std::nullopt;
         }});

    defs.push_back(
        {"T^k = S^k exactly when the component powers agree", 0x202, false,
         [](SplitMix64& rng, std::size_t) -> std::optional<InstanceFailure> {
             std::size_t n = 2 + rng.below(4);
             BicomplexOperator s{gen_arbitrary(GenSpec::arbitrary(rng.next(), n, 5)),
                                 gen_arbitrary(GenSpec::arbitrary(rng.next(), n, 5))};
             BicomplexOperator t{gen_arbitrary(GenSpec::arbitrary(rng.next(), n, 5)),
                                 gen_arbitrary(GenSpec::arbitrary(rng.next(), n, 5))};
             unsigned k = 1 + static_cast<unsigned>(rng.below(5));
             if (powers_equal(s, t, k) != (power(s, k) == power(t, k)))
                 return InstanceFailure{"powers_equal disagrees with comparing full powers",
                                        {{"s", s.to_matrix()}, {"t", t.to_matrix()}}};
             // Distinct nilpotents of index <= k become equal at power k.
             std::size_t k1 = 1 + rng.below(n);
             BicomplexOperator n1{gen_nilpotent(GenSpec::nilpotent(rng.next(), n, k1)),
                                  gen_nilpotent(GenSpec::nilpotent(rng.next(), n, 1 + rng.below(n)))};
             if (!powers_equal(n1, BicomplexOperator::zero(n), n))
                 return InstanceFailure{"nilpotent operator power at n is not zero",
                                        {{"instance", n1.to_matrix()}}};
             return std::nullopt;
         }});

    defs.push_back(
        {"T is nilpotent exactly when both components are nilpotent", 0x203, false,
         [](SplitMix64& rng, std::size_t) -> std::optional<InstanceFailure> {
             std::size_t n = 2 + rng.below(5);
             bool minus_nil = rng.below(2) == 0;
             bool plus_nil = rng.below(2) == 0;
             auto component = [&](bool nil) {
                 if (nil) return gen_nilpotent(GenSpec::nilpotent(rng.next(), n, 1 + rng.below(n)));
                 // A rank >= 1 idempotent or a unimodular matrix is never nilpotent.
                 if (rng.below(2) == 0)
                     return gen_idempotent(GenSpec::idempotent(rng.next(), n, 1 + rng.below(n)));
                 return gen_invertible(GenSpec::invertible(rng.next(), n));
             };
             BicomplexMatrix a{component(minus_nil), component(plus_nil)};
             NilpotencyReport report = nilpotency(a);
             if (report.is_nilpotent != (minus_nil && plus_nil))
                 return InstanceFailure{"nilpotency differs from component nilpotency",
                                        {{"instance", a}}};
             return std::nullopt;
         }});

    defs.push_back(
        {"composite index is max(k1, k2) and T^(index-1) != 0", 0x204, false,
         [](SplitMix64& rng, std::size_t) -> std::optional<InstanceFailure> {
             std::size_t k1 = 0, k2 = 0;
             BicomplexMatrix a = random_nilpotent_pair(rng, k1, k2);
             NilpotencyReport report = nilpotency(a);
             std::size_t expected = std::max(k1, k2);
             if (!report.is_nilpotent || report.index != expected)
                 return InstanceFailure{"index != max(k1, k2)", {{"instance", a}}};
             if (!power(a, expected).is_zero())
                 return InstanceFailure{"T^index != 0", {{"instance", a}}};
             if (expected > 1 && power(a, expected - 1).is_zero())
                 return InstanceFailure{"T^(index-1) = 0", {{"instance", a}}};
             return std::nullopt;
         }});

    defs.push_back(
        {"at least one component attains the composite index", 0x205, false,
         [](SplitMix64& rng, std::size_t) -> std::optional<InstanceFailure> {
             std::size_t k1 = 0, k2 = 0;
             BicomplexMatrix a = random_nilpotent_pair(rng, k1, k2);
             NilpotencyReport report = nilpotency(a);
             if (!report.is_nilpotent || !report.component_indices)
                 return InstanceFailure{"generated pair not nilpotent", {{"instance", a}}};
             auto [c1, c2] = *report.component_indices;
             if (c1 != *report.index && c2 != *report.index)
                 return InstanceFailure{"no component attains the composite index",
                                        {{"instance", a}}};
             return std::nullopt;
         }});

    defs.push_back(
        {"nilpotent T has det(T1) = det(T2) = 0", 0x206, false,
         [](SplitMix64& rng, std::size_t) -> std::optional<InstanceFailure> {
             std::size_t k1 = 0, k2 = 0;
             BicomplexMatrix a = random_nilpotent_pair(rng, k1, k2);
             SingularityReport s = singularity(a);
             if (!s.minus_singular || !s.plus_singular || !s.is_singular)
                 return InstanceFailure{"nilpotent composite has a nonzero component determinant",
                                        {{"instance", a}}};
             return std::nullopt;
         }});

    defs.push_back(
        {"singularity attribution names exactly the singular components", 0x207, false,
         [](SplitMix64& rng, std::size_t) -> std::optional<InstanceFailure> {
             std::size_t n = 2 + rng.below(5);
             bool nil_on_minus = rng.below(2) == 0;
             ComplexMatrix nil = gen_nilpotent(GenSpec::nilpotent(rng.next(), n, 1 + rng.below(n)));
             ComplexMatrix inv = gen_invertible(GenSpec::invertible(rng.next(), n));
             BicomplexMatrix a = nil_on_minus ? BicomplexMatrix(nil, inv) : BicomplexMatrix(inv, nil);
             SingularityReport s = singularity(a);
             if (!s.is_singular || s.minus_singular != nil_on_minus ||
                 s.plus_singular == nil_on_minus)
                 return InstanceFailure{"attribution does not match the construction",
                                        {{"instance", a}}};
             return std::nullopt;
         }});

    defs.push_back(
        {"witness: both components singular yet T is not nilpotent", 0x208, true,
         [](SplitMix64&, std::size_t) -> std::optional<InstanceFailure> {
             BicomplexMatrix t{ComplexMatrix{{0, 1, 1}, {0, 0, 1}, {0, 0, 0}},
                               ComplexMatrix::diagonal({1, 0, 1})};
             auto nil_minus = nilpotency_index(t.minus());
             if (nil_minus != 3)
                 return InstanceFailure{"minus component index != 3", {{"instance", t}}};
             if (!(t.plus() * t.plus() == t.plus()) || nilpotency_index(t.plus()))
                 return InstanceFailure{"plus component is not a non-nilpotent idempotent",
                                        {{"instance", t}}};
             SingularityReport s = singularity(t);
             if (!s.minus_singular || !s.plus_singular)
                 return InstanceFailure{"witness components not both singular", {{"instance", t}}};
             if (nilpotency(t).is_nilpotent)
                 return InstanceFailure{"witness is nilpotent", {{"instance", t}}};
             return std::nullopt;
         }});

    defs.push_back(
        {"nilpotency, index and singularity are basis invariants", 0x209, false,
         [](SplitMix64& rng, std::size_t) -> std::optional<InstanceFailure> {
             std::size_t k1 = 0, k2 = 0;
             BicomplexMatrix a = random_nilpotent_pair(rng, k1, k2);
             BicomplexOperator t = BicomplexOperator::from_matrix(a);
             Basis b(gen_invertible(GenSpec::invertible(rng.next(), a.rows())));
             BicomplexMatrix moved = matrix_in_basis(t, b);
             NilpotencyReport before = nilpotency(a);
             NilpotencyReport after = nilpotency(moved);
             if (before.is_nilpotent != after.is_nilpotent || before.index != after.index)
                 return InstanceFailure{"basis change altered nilpotency or index",
                                        {{"standard", a}, {"changed", moved}}};
             if (singularity(a).is_singular != singularity(moved).is_singular)
                 return InstanceFailure{"basis change altered singularity",
                                        {{"standard", a}, {"changed", moved}}};
             return std::nullopt;
         }});

    return defs;
}

// --- idempotent suite -----------------------------------------------------

inline std::vector<CheckDef> idempotent_checks() {
    std::vector<CheckDef> defs;

    defs.push_back(
        {"A^2 = A exactly when both components are idempotent", 0x301, false,
         [](SplitMix64& rng, std::size_t) -> std::optional<InstanceFailure> {
             std::size_t n = 2 + rng.below(5);
             bool spoil_minus = rng.below(4) == 0;
             bool spoil_plus = rng.below(4) == 0;
             auto component = [&](bool spoil) {
                 // A nilpotent of index >= 2 is never idempotent.
                 if (spoil && n >= 2)
                     return gen_nilpotent(GenSpec::nilpotent(rng.next(), n, 2 + rng.below(n - 1)));
                 return gen_idempotent(GenSpec::idempotent(rng.next(), n, rng.below(n + 1)));
             };
             BicomplexMatrix a{component(spoil_minus), component(spoil_plus)};
             bool expected = !(spoil_minus && n >= 2) && !(spoil_plus && n >= 2);
             if (is_idempotent(a) != expected)
                 return InstanceFailure{"idempotency differs from component idempotency",
                                        {{"instance", a}}};
             return std::nullopt;
         }});

    defs.push_back({"I - A is idempotent for idempotent A", 0x302, false,
                    [](SplitMix64& rng, std::size_t) -> std::optional<InstanceFailure> {
                        BicomplexMatrix a = random_idempotent_pair(rng);
                        BicomplexMatrix c = complement(a);
                        if (!is_idempotent(c))
                            return InstanceFailure{"I - A not idempotent", {{"instance", a}}};
                        if (complement(c) != a)
                            return InstanceFailure{"I - (I - A) != A", {{"instance", a}}};
                        return std::nullopt;
                    }});

    defs.push_back(
        {"e1 A and e2 A are idempotent for idempotent A, and they sum to A", 0x303, false,
         [](SplitMix64& rng, std::size_t) -> std::optional<InstanceFailure> {
             BicomplexMatrix a = random_idempotent_pair(rng);
             if (!is_idempotent(section_e1(a)) || !is_idempotent(section_e2(a)))
                 return InstanceFailure{"a section of an idempotent is not idempotent",
                                        {{"instance", a}}};
             if (section_e1(a) + section_e2(a) != a)
                 return InstanceFailure{"e1 A + e2 A != A", {{"instance", a}}};
             if (!(section_e1(a) * section_e2(a)).is_zero())
                 return InstanceFailure{"(e1 A)(e2 A) != 0", {{"instance", a}}};
             return std::nullopt;
         }});

    defs.push_back({"e1 A + e2 B is idempotent for idempotent A, B", 0x304, false,
                    [](SplitMix64& rng, std::size_t) -> std::optional<InstanceFailure> {
                        std::size_t n = 2 + rng.below(5);
                        BicomplexMatrix a{gen_idempotent(GenSpec::idempotent(rng.next(), n, rng.below(n + 1))),
                                          gen_idempotent(GenSpec::idempotent(rng.next(), n, rng.below(n + 1)))};
                        BicomplexMatrix b{gen_idempotent(GenSpec::idempotent(rng.next(), n, rng.below(n + 1))),
                                          gen_idempotent(GenSpec::idempotent(rng.next(), n, rng.below(n + 1)))};
                        if (!is_idempotent(mix(a, b)))
                            return InstanceFailure{"e1 A + e2 B not idempotent",
                                                   {{"a", a}, {"b", b}}};
                        return std::nullopt;
                    }});

    defs.push_back(
        {"e1(I - A) and e2(I - A) are idempotent for idempotent A", 0x305, false,
         [](SplitMix64& rng, std::size_t) -> std::optional<InstanceFailure> {
             BicomplexMatrix a = random_idempotent_pair(rng);
             if (!is_idempotent(complement_section_e1(a)) ||
                 !is_idempotent(complement_section_e2(a)))
                 return InstanceFailure{"complement section not idempotent", {{"instance", a}}};
             return std::nullopt;
         }});

    defs.push_back(
        {"A + B is idempotent when AB = BA = 0", 0x306, false,
         [](SplitMix64& rng, std::size_t) -> std::optional<InstanceFailure> {
             std::size_t n = 2 + rng.below(5);
             std::size_t r1 = rng.below(n);
             std::size_t s1 = rng.below(n - r1 + 1);
             std::size_t r2 = rng.below(n);
             std::size_t s2 = rng.below(n - r2 + 1);
             auto [pm, rm] = gen_complementary_idempotents(rng.next(), n, r1, s1);
             auto [pp, rp] = gen_complementary_idempotents(rng.next(), n, r2, s2);
             BicomplexMatrix a{pm, pp};
             BicomplexMatrix b{rm, rp};
             if (!(a * b).is_zero() || !(b * a).is_zero())
                 return InstanceFailure{"construction violates AB = BA = 0", {{"a", a}, {"b", b}}};
             if (!is_idempotent(a + b))
                 return InstanceFailure{"A + B not idempotent despite AB = BA = 0",
                                        {{"a", a}, {"b", b}}};
             return std::nullopt;
         }});

    defs.push_back(
        {"S T is idempotent exactly when S1 T1 and S2 T2 are idempotent", 0x307, false,
         [](SplitMix64& rng, std::size_t) -> std::optional<InstanceFailure> {
             std::size_t n = 2 + rng.below(5);
             BicomplexMatrix s{gen_idempotent(GenSpec::idempotent(rng.next(), n, rng.below(n + 1))),
                               gen_idempotent(GenSpec::idempotent(rng.next(), n, rng.below(n + 1)))};
             BicomplexMatrix t{gen_idempotent(GenSpec::idempotent(rng.next(), n, rng.below(n + 1))),
                               gen_idempotent(GenSpec::idempotent(rng.next(), n, rng.below(n + 1)))};
             BicomplexMatrix st = s * t;
             bool m_idem = st.minus() * st.minus() == st.minus();
             bool p_idem = st.plus() * st.plus() == st.plus();
             if (is_idempotent(st) != (m_idem && p_idem))
                 return InstanceFailure{"product idempotency differs from component statement",
                                        {{"s", s}, {"t", t}}};
             return std::nullopt;
         }});

    defs.push_back(
        {"idempotency is a basis invariant", 0x308, false,
         [](SplitMix64& rng, std::size_t) -> std::optional<InstanceFailure> {
             BicomplexMatrix a = random_idempotent_pair(rng);
             BicomplexOperator t = BicomplexOperator::from_matrix(a);
             Basis b(gen_invertible(GenSpec::invertible(rng.next(), a.rows())));
             BicomplexMatrix moved = matrix_in_basis(t, b);
             if (is_idempotent(a) != is_idempotent(moved))
                 return InstanceFailure{"basis change altered idempotency",
                                        {{"standard", a}, {"changed", moved}}};
             return std::nullopt;
         }});

    return defs;
}

inline std::vector<CheckDef> checks_for(const std::string& suite) {
    if (suite == "scalar") return scalar_checks();
    if (suite == "nilpotent") return nilpotent_checks();
    if (suite == "idempotent") return idempotent_checks();
    throw BadSpec("unknown suite: " + suite);
}

inline std::string slug(std::uint64_t salt) {
    char buf[16];
    std::snprintf(buf, sizeof(buf), "%llx", static_cast<unsigned long long>(salt));
    return buf;
}

inline std::vector<CheckResult> run_checks(const std::string& suite,
                                           const std::vector<CheckDef>& defs,
                                           const VerifyOptions& opt) {
    std::vector<CheckResult> results;
    for (const auto& def : defs) {
        CheckResult res;
        res.suite = suite;
        res.name = def.name;
        res.instances = def.fixed_single ? 1 : opt.instances;
        for (std::size_t i = 0; i < res.instances; ++i) {
            SplitMix64 rng(verify_detail::derive_seed(opt.seed, def.salt, i));
            auto failure = def.run(rng, i);
            if (!failure) continue;

            res.passed = false;
            res.detail = failure->detail + " (instance " + std::to_string(i) + ")";
            std::filesystem::create_directories(opt.counterexample_dir);
            io::json meta = {{"kind", "counterexample"}, {"suite", suite},
                             {"check", def.name},        {"check_salt", def.salt},
                             {"instance", i},            {"seed", opt.seed},
                             {"identity", failure->detail}};
            std::size_t artifact_index = 0;
            for (const auto& [label, matrix] : failure->artifacts) {
                io::json m = meta;
                m["artifact"] = label;
                std::string path = opt.counterexample_dir + "/counterexample_" + suite + "_" +
                                   verify_detail::slug(def.salt) + "_" +
                                   std::to_string(artifact_index++) + ".json";
                io::save(path, io::to_json(matrix, io::FileKind::Matrix,
                                           io::Encoding::Idempotent, std::move(m)));
                if (res.counterexample_path.empty()) res.counterexample_path = path;
            }
            break;
        }
        results.push_back(std::move(res));
    }
    return results;
}

} // namespace verify_detail

inline std::vector<CheckResult> verify_suite(const std::string& suite, const VerifyOptions& opt) {
    return verify_detail::run_checks(suite, verify_detail::checks_for(suite), opt);
}

inline std::vector<CheckResult> verify_suites(const std::string& which, const VerifyOptions& opt) {
    std::vector<CheckResult> all;
    std::vector<std::string> names;
    if (which == "all") names = {"scalar", "nilpotent", "idempotent"};
    else names = {which};
    for (const auto& name : names) {
        auto partial = verify_suite(name, opt);
        all.insert(all.end(), partial.begin(), partial.end());
    }
    return all;
}

// Re-checks a file produced by `generate` (against its certificate) or by a
// failed `verify` run (re-deriving the exact failing instance).
inline CheckResult replay_instance(const std::string& path) {
    io::Document doc = io::load(path);
    if (doc.metadata.is_null() || !doc.metadata.contains("kind"))
        throw BadSpec("replay requires metadata with a kind field");
    std::string kind = doc.metadata.at("kind").get<std::string>();

    CheckResult res;
    res.suite = "replay";
    res.instances = 1;

    if (kind == "counterexample") {
        std::string suite = doc.metadata.at("suite").get<std::string>();
        std::string check = doc.metadata.at("check").get<std::string>();
        std::uint64_t salt = doc.metadata.at("check_salt").get<std::uint64_t>();
        std::size_t instance = doc.metadata.at("instance").get<std::size_t>();
        std::uint64_t seed = doc.metadata.at("seed").get<std::uint64_t>();
        for (const auto& def : verify_detail::checks_for(suite)) {
            if (def.name != check) continue;
            SplitMix64 rng(verify_detail::derive_seed(seed, salt, instance));
            auto failure = def.run(rng, instance);
            res.name = check;
            res.passed = !failure.has_value();
            if (failure) res.detail = failure->detail + " (instance " + std::to_string(instance) + ")";
            return res;
        }
        throw BadSpec("counterexample names an unknown check: " + check);
    }

    if (!doc.matrix) throw BadSpec("replay requires a matrix or operator document");
    const BicomplexMatrix& m = *doc.matrix;
    auto cert = [&](const char* field) {
        if (!doc.metadata.contains("certificate") || !doc.metadata.at("certificate").contains(field))
            throw BadSpec(std::string("certificate field missing: ") + field);
        return doc.metadata.at("certificate").at(field).get<std::size_t>();
    };

    if (kind == "nilpotent") {
        std::size_t k = cert("index");
        res.name = "A^k = 0 and A^(k-1) != 0 for certified index k = " + std::to_string(k);
        NilpotencyReport report = nilpotency(m);
        res.passed = report.is_nilpotent && report.index == k;
        if (!res.passed) res.detail = "nilpotency index does not match the certificate";
    } else if (kind == "idempotent") {
        std::size_t r = cert("rank");
        res.name = "A^2 = A with certified rank " + std::to_string(r);
        bool idem = is_idempotent(m);
        bool rank_ok = trace(m.minus()) == RationalComplex(static_cast<long>(r)) &&
                       trace(m.plus()) == RationalComplex(static_cast<long>(r));
        res.passed = idem && rank_ok;
        if (!idem) res.detail = "A^2 != A";
        else if (!rank_ok) res.detail = "component trace does not equal the certified rank";
    } else if (kind == "invertible") {
        res.name = "det(A1), det(A2) in {+1, -1}";
        auto unimodular = [](const RationalComplex& d) {
            return d == RationalComplex::one() || d == -RationalComplex::one();
        };
        res.passed = unimodular(determinant(m.minus())) && unimodular(determinant(m.plus()));
        if (!res.passed) res.detail = "component determinant is not +-1";
    } else if (kind == "arbitrary") {
        res.name = "document parses and is well-formed";
        res.passed = true;
    } else {
        throw BadSpec("replay does not understand kind: " + kind);
    }
    return res;
}

} // namespace bcx
