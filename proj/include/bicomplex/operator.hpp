// Linear operators T = e1*T1 + e2*T2 on C2^n.
//
// Operators are identified with their standard-basis component matrices,
// which makes equality decidable; the function view is recovered by apply.
#pragma once

#include "bicomplex/complex_matrix.hpp"
#include "bicomplex/matrix.hpp"
#include "bicomplex/scalar.hpp"

#include <cstddef>
#include <utility>
#include <vector>

namespace bcx {

// A vector in C2^n; splits losslessly into its component complex vectors.
struct BicomplexVector {
    std::vector<BicomplexScalar> entries;

    BicomplexVector() = default;
    explicit BicomplexVector(std::size_t n) : entries(n) {}
    BicomplexVector(std::initializer_list<BicomplexScalar> init) : entries(init) {}

    static BicomplexVector from_components(const std::vector<RationalComplex>& minus,
                                           const std::vector<RationalComplex>& plus) {
        if (minus.size() != plus.size())
            throw DimensionMismatch("component vectors must have equal length");
        BicomplexVector v(minus.size());
        for (std::size_t i = 0; i < minus.size(); ++i) v.entries[i] = {minus[i], plus[i]};
        return v;
    }

    std::size_t size() const { return entries.size(); }

    std::vector<RationalComplex> minus_component() const {
        std::vector<RationalComplex> c(entries.size());
        for (std::size_t i = 0; i < entries.size(); ++i) c[i] = entries[i].minus;
        return c;
    }
    std::vector<RationalComplex> plus_component() const {
        std::vector<RationalComplex> c(entries.size());
        for (std::size_t i = 0; i < entries.size(); ++i) c[i] = entries[i].plus;
        return c;
    }

    friend BicomplexVector operator+(const BicomplexVector& a, const BicomplexVector& b) {
        if (a.size() != b.size()) throw DimensionMismatch("vector addition requires equal lengths");
        BicomplexVector r(a.size());
        for (std::size_t i = 0; i < a.size(); ++i) r.entries[i] = a.entries[i] + b.entries[i];
        return r;
    }

    friend bool operator==(const BicomplexVector& a, const BicomplexVector& b) {
        return a.entries == b.entries;
    }
    friend bool operator!=(const BicomplexVector& a, const BicomplexVector& b) { return !(a == b); }
};

// An ordered basis of C1^n, held as the invertible change-of-basis matrix P
// whose columns are the basis vectors. The inverse is computed eagerly, so a
// singular matrix is rejected at construction.
class Basis {
public:
    explicit Basis(ComplexMatrix p) : p_(std::move(p)), p_inverse_(checked_inverse(p_)) {}

    static Basis standard(std::size_t n) { return Basis(ComplexMatrix::identity(n)); }

    std::size_t dim() const { return p_.rows(); }
    const ComplexMatrix& matrix() const { return p_; }
    const ComplexMatrix& inverse_matrix() const { return p_inverse_; }

private:
    static ComplexMatrix checked_inverse(const ComplexMatrix& p) {
        if (!p.is_square()) throw NotSquare("a basis matrix must be square");
        auto inv = inverse(p);
        if (!inv) throw SingularBasis("basis matrix has zero determinant");
        return std::move(*inv);
    }

    ComplexMatrix p_;
    ComplexMatrix p_inverse_;
};

class BicomplexOperator {
public:
    BicomplexOperator(ComplexMatrix t1, ComplexMatrix t2)
        : t1_(std::move(t1)), t2_(std::move(t2)) {
        if (!t1_.is_square() || !t2_.is_square())
            throw NotSquare("operator components must be square");
        if (t1_.rows() != t2_.rows())
            throw DimensionMismatch("operator components must have equal size");
    }

    static BicomplexOperator identity(std::size_t n) {
        return {ComplexMatrix::identity(n), ComplexMatrix::identity(n)};
    }
    static BicomplexOperator zero(std::size_t n) {
        return {ComplexMatrix::zero(n, n), ComplexMatrix::zero(n, n)};
    }
    static BicomplexOperator from_matrix(const BicomplexMatrix& a) {
        if (!a.is_square()) throw NotSquare("operator requires a square matrix");
        return {a.minus(), a.plus()};
    }

    std::size_t dim() const { return t1_.rows(); }
    const ComplexMatrix& t1() const { return t1_; }
    const ComplexMatrix& t2() const { return t2_; }

    // The standard-basis bicomplex matrix e1*[T1] + e2*[T2].
    BicomplexMatrix to_matrix() const { return {t1_, t2_}; }

    bool is_zero() const { return t1_.is_zero() && t2_.is_zero(); }

    friend bool operator==(const BicomplexOperator& a, const BicomplexOperator& b) {
        return a.t1_ == b.t1_ && a.t2_ == b.t2_;
    }
    friend bool operator!=(const BicomplexOperator& a, const BicomplexOperator& b) {
        return !(a == b);
    }

private:
    ComplexMatrix t1_;
    ComplexMatrix t2_;
};

// T(v) componentwise: (T1 v^-, T2 v^+).
inline BicomplexVector apply(const BicomplexOperator& t, const BicomplexVector& v) {
    if (v.size() != t.dim()) throw DimensionMismatch("vector length must equal operator dimension");
    auto vm = v.minus_component();
    auto vp = v.plus_component();
    BicomplexVector r(t.dim());
    for (std::size_t i = 0; i < t.dim(); ++i) {
        RationalComplex m, p;
        for (std::size_t j = 0; j < t.dim(); ++j) {
            m += t.t1()(i, j) * vm[j];
            p += t.t2()(i, j) * vp[j];
        }
        r.entries[i] = {m, p};
    }
    return r;
}

// S o T = e1 (S1 o T1) + e2 (S2 o T2).
inline BicomplexOperator compose(const BicomplexOperator& s, const BicomplexOperator& t) {
    if (s.dim() != t.dim()) throw DimensionMismatch("composition requires equal dimensions");
    return {s.t1() * t.t1(), s.t2() * t.t2()};
}

inline BicomplexOperator add(const BicomplexOperator& s, const BicomplexOperator& t) {
    if (s.dim() != t.dim()) throw DimensionMismatch("operator addition requires equal dimensions");
    return {s.t1() + t.t1(), s.t2() + t.t2()};
}

// Scaling by a C1 scalar: alpha T = e1 (alpha T1) + e2 (alpha T2). Bicomplex
// scaling is expressible through the matrix-level scalar product instead.
inline BicomplexOperator scale(const RationalComplex& alpha, const BicomplexOperator& t) {
    return {alpha * t.t1(), alpha * t.t2()};
}

inline BicomplexOperator power(const BicomplexOperator& t, unsigned long k) {
    return {power(t.t1(), k), power(t.t2(), k)};
}

// T^k = S^k iff the component k-th powers agree.
inline bool powers_equal(const BicomplexOperator& s, const BicomplexOperator& t, unsigned long k) {
    if (s.dim() != t.dim()) throw DimensionMismatch("powers_equal requires equal dimensions");
    return power(s.t1(), k) == power(t.t1(), k) && power(s.t2(), k) == power(t.t2(), k);
}

// [T]_B = e1 (P^-1 T1 P) + e2 (P^-1 T2 P).
inline BicomplexMatrix matrix_in_basis(const BicomplexOperator& t, const Basis& b) {
    if (b.dim() != t.dim()) throw DimensionMismatch("basis dimension must equal operator dimension");
    const ComplexMatrix& p = b.matrix();
    const ComplexMatrix& pinv = b.inverse_matrix();
    return {pinv * t.t1() * p, pinv * t.t2() * p};
}

inline NilpotencyReport is_nilpotent_operator(const BicomplexOperator& t) {
    return nilpotency(t.to_matrix());
}

inline bool is_idempotent_operator(const BicomplexOperator& t) {
    return is_idempotent(t.to_matrix());
}

inline SingularityReport is_singular_operator(const BicomplexOperator& t) {
    return singularity(t.to_matrix());
}

} // namespace bcx
