// Deterministic, seeded construction of component matrices with certified
// structure: nilpotent of prescribed index, idempotent of prescribed rank,
// exactly invertible, or arbitrary bounded-rational.
//
// The pseudo-random source is splitmix64, fixed so that corpora are
// reproducible bit-for-bit across runs and implementations; emitted files
// record the algorithm identifier. Conjugators are unimodular by
// construction (products of elementary operations with det +-1 and small
// Gaussian-integer multipliers), so exact inverses come for free and entry
// growth stays bounded.
#pragma once

#include "bicomplex/complex_matrix.hpp"
#include "bicomplex/errors.hpp"

#include <cstdint>
#include <string_view>
#include <utility>
#include <vector>

namespace bcx {

inline constexpr std::string_view kGeneratorAlgorithm = "splitmix64";

struct SplitMix64 {
    std::uint64_t state;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        state += 0x9e3779b97f4a7c15ULL;
        std::uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform-ish value in [0, bound); bound > 0. Modulo bias is irrelevant
    // here; what matters is platform-independent determinism.
    std::uint64_t below(std::uint64_t bound) { return next() % bound; }

    long pick(long lo, long hi) { // inclusive bounds
        return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }
};

enum class GenKind { Nilpotent, Idempotent, Invertible, Arbitrary };

inline const char* to_string(GenKind k) {
    switch (k) {
        case GenKind::Nilpotent: return "nilpotent";
        case GenKind::Idempotent: return "idempotent";
        case GenKind::Invertible: return "invertible";
        case GenKind::Arbitrary: return "arbitrary";
    }
    return "?";
}

struct GenSpec {
    std::uint64_t seed = 0;
    std::size_t n = 1;
    GenKind kind = GenKind::Arbitrary;
    std::size_t index = 0;     // nilpotency index, Nilpotent only
    std::size_t rank = 0;      // Idempotent only
    std::size_t entry_bound = 10;

    static GenSpec nilpotent(std::uint64_t seed, std::size_t n, std::size_t index,
                             std::size_t entry_bound = 10) {
        return {seed, n, GenKind::Nilpotent, index, 0, entry_bound};
    }
    static GenSpec idempotent(std::uint64_t seed, std::size_t n, std::size_t rank,
                              std::size_t entry_bound = 10) {
        return {seed, n, GenKind::Idempotent, 0, rank, entry_bound};
    }
    static GenSpec invertible(std::uint64_t seed, std::size_t n, std::size_t entry_bound = 10) {
        return {seed, n, GenKind::Invertible, 0, 0, entry_bound};
    }
    static GenSpec arbitrary(std::uint64_t seed, std::size_t n, std::size_t entry_bound = 10) {
        return {seed, n, GenKind::Arbitrary, 0, 0, entry_bound};
    }

    void validate() const {
        if (n < 1) throw BadSpec("size must be at least 1");
        if (entry_bound < 1) throw BadSpec("entry bound must be at least 1");
        if (kind == GenKind::Nilpotent && (index < 1 || index > n))
            throw BadSpec("nilpotency index must satisfy 1 <= k <= n");
        if (kind == GenKind::Idempotent && rank > n)
            throw BadSpec("idempotent rank must satisfy 0 <= r <= n");
    }
};

// Block-diagonal shift matrix: one Jordan-style shift block per size, ones on
// the first superdiagonal inside each block. Its nilpotency index is the
// largest block size.
inline ComplexMatrix nilpotent_shift(const std::vector<std::size_t>& block_sizes) {
    std::size_t n = 0;
    for (std::size_t b : block_sizes) n += b;
    if (n == 0) throw BadSpec("shift matrix needs at least one block");
    ComplexMatrix m(n, n);
    std::size_t offset = 0;
    for (std::size_t b : block_sizes) {
        for (std::size_t i = 0; i + 1 < b; ++i)
            m(offset + i, offset + i + 1) = RationalComplex::one();
        offset += b;
    }
    return m;
}

// A random unimodular matrix and its exact inverse, built from `ops`
// elementary row operations applied to the identity (det is +-1). With
// ops = 0 both are the identity. Multipliers are Gaussian integers with
// magnitude <= min(entry_bound, 2), keeping entry growth tame enough that
// downstream double-precision arithmetic on generated corpora stays exact.
inline std::pair<ComplexMatrix, ComplexMatrix> unimodular_pair(std::size_t n, std::size_t entry_bound,
                                                               SplitMix64& rng, std::size_t ops) {
    ComplexMatrix q = ComplexMatrix::identity(n);
    ComplexMatrix qinv = ComplexMatrix::identity(n);
    if (n == 1 || ops == 0) return {q, qinv};

    long bound = static_cast<long>(entry_bound < 2 ? entry_bound : 2);
    for (std::size_t op = 0; op < ops; ++op) {
        std::uint64_t choice = rng.below(10);
        if (choice < 7) {
            // row_i += mu * row_j on q; column_j -= mu * column_i on qinv
            std::size_t i = rng.below(n);
            std::size_t j = rng.below(n - 1);
            if (j >= i) ++j;
            long mag = rng.pick(1, bound);
            long value = rng.below(2) ? mag : -mag;
            RationalComplex mu = rng.below(2) ? RationalComplex(Rational(value), Rational(0))
                                              : RationalComplex(Rational(0), Rational(value));
            for (std::size_t c = 0; c < n; ++c) q(i, c) += mu * q(j, c);
            for (std::size_t r = 0; r < n; ++r) qinv(r, j) -= mu * qinv(r, i);
        } else if (choice < 9) {
            // swap rows of q; swap the same columns of qinv
            std::size_t i = rng.below(n);
            std::size_t j = rng.below(n - 1);
            if (j >= i) ++j;
            for (std::size_t c = 0; c < n; ++c) std::swap(q(i, c), q(j, c));
            for (std::size_t r = 0; r < n; ++r) std::swap(qinv(r, i), qinv(r, j));
        } else {
            // negate a row of q and the matching column of qinv
            std::size_t i = rng.below(n);
            for (std::size_t c = 0; c < n; ++c) q(i, c) = -q(i, c);
            for (std::size_t r = 0; r < n; ++r) qinv(r, i) = -qinv(r, i);
        }
    }
    return {q, qinv};
}

namespace detail {

inline std::pair<ComplexMatrix, ComplexMatrix> conjugator(const GenSpec& spec, SplitMix64& rng) {
    std::size_t ops = spec.n + rng.below(spec.n + 1);
    return unimodular_pair(spec.n, spec.entry_bound, rng, ops);
}

inline Rational random_rational(SplitMix64& rng, std::size_t bound) {
    long b = static_cast<long>(bound);
    return {rng.pick(-b, b), rng.pick(1, b)};
}

} // namespace detail

// Q * N * Q^-1 with N a shift matrix whose largest block has size
// spec.index; certified by the repeated-multiplication oracle before return.
inline ComplexMatrix gen_nilpotent(const GenSpec& spec) {
    if (spec.kind != GenKind::Nilpotent) throw BadSpec("spec kind must be nilpotent");
    spec.validate();
    SplitMix64 rng(spec.seed);

    std::vector<std::size_t> blocks{spec.index};
    std::size_t remaining = spec.n - spec.index;
    while (remaining > 0) {
        std::size_t b = 1 + rng.below(remaining < spec.index ? remaining : spec.index);
        blocks.push_back(b);
        remaining -= b;
    }
    auto [q, qinv] = detail::conjugator(spec, rng);
    ComplexMatrix m = q * nilpotent_shift(blocks) * qinv;

    // Certificate check: M^k = 0 and M^(k-1) != 0.
    ComplexMatrix p = ComplexMatrix::identity(spec.n);
    for (std::size_t k = 1; k < spec.index; ++k) {
        p = p * m;
        if (p.is_zero()) throw Error("generator certificate failed: index too small");
    }
    if (!(p * m).is_zero()) throw Error("generator certificate failed: power not zero");
    return m;
}

// Q * diag(1 x rank, 0 x (n - rank)) * Q^-1; certified by one squaring.
inline ComplexMatrix gen_idempotent(const GenSpec& spec) {
    if (spec.kind != GenKind::Idempotent) throw BadSpec("spec kind must be idempotent");
    spec.validate();
    SplitMix64 rng(spec.seed);

    ComplexMatrix d(spec.n, spec.n);
    for (std::size_t i = 0; i < spec.rank; ++i) d(i, i) = RationalComplex::one();
    auto [q, qinv] = detail::conjugator(spec, rng);
    ComplexMatrix m = q * d * qinv;

    if (!(m * m == m)) throw Error("generator certificate failed: square differs");
    return m;
}

// A product of elementary matrices; det is exactly +1 or -1, so exact
// inversion always succeeds.
inline ComplexMatrix gen_invertible(const GenSpec& spec) {
    if (spec.kind != GenKind::Invertible) throw BadSpec("spec kind must be invertible");
    spec.validate();
    SplitMix64 rng(spec.seed);
    ComplexMatrix m = detail::conjugator(spec, rng).first;

    RationalComplex det = determinant(m);
    if (!(det == RationalComplex::one() || det == -RationalComplex::one()))
        throw Error("generator certificate failed: determinant not +-1");
    return m;
}

// Entrywise bounded rationals; no structural certificate.
inline ComplexMatrix gen_arbitrary(const GenSpec& spec) {
    if (spec.kind != GenKind::Arbitrary) throw BadSpec("spec kind must be arbitrary");
    spec.validate();
    SplitMix64 rng(spec.seed);
    ComplexMatrix m(spec.n, spec.n);
    for (std::size_t i = 0; i < spec.n; ++i)
        for (std::size_t j = 0; j < spec.n; ++j)
            m(i, j) = {detail::random_rational(rng, spec.entry_bound),
                       detail::random_rational(rng, spec.entry_bound)};
    return m;
}

inline ComplexMatrix generate(const GenSpec& spec) {
    switch (spec.kind) {
        case GenKind::Nilpotent: return gen_nilpotent(spec);
        case GenKind::Idempotent: return gen_idempotent(spec);
        case GenKind::Invertible: return gen_invertible(spec);
        case GenKind::Arbitrary: return gen_arbitrary(spec);
    }
    throw BadSpec("unknown generator kind");
}

// Two idempotents with complementary ranges built from one conjugator:
// P = Q diag(1_r, 0) Q^-1 and R = Q diag(0_r, 1_s, 0) Q^-1, so that
// P*R = R*P = 0 and P + R is again idempotent. Requires r + s <= n.
inline std::pair<ComplexMatrix, ComplexMatrix> gen_complementary_idempotents(
    std::uint64_t seed, std::size_t n, std::size_t r, std::size_t s, std::size_t entry_bound = 10) {
    if (r + s > n) throw BadSpec("complementary ranks must satisfy r + s <= n");
    GenSpec base = GenSpec::idempotent(seed, n, r, entry_bound);
    SplitMix64 rng(seed);
    ComplexMatrix d1(n, n), d2(n, n);
    for (std::size_t i = 0; i < r; ++i) d1(i, i) = RationalComplex::one();
    for (std::size_t i = r; i < r + s; ++i) d2(i, i) = RationalComplex::one();
    auto [q, qinv] = detail::conjugator(base, rng);
    ComplexMatrix p = q * d1 * qinv;
    ComplexMatrix rr = q * d2 * qinv;
    if (!(p * p == p) || !(rr * rr == rr)) throw Error("generator certificate failed: square differs");
    if (!(p * rr).is_zero() || !(rr * p).is_zero())
        throw Error("generator certificate failed: ranges not complementary");
    return {p, rr};
}

} // namespace bcx
