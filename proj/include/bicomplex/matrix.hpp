// Bicomplex matrices A = e1*A- + e2*A+ in decomposed form.
//
// Sums, products, scalar products and powers all act componentwise on the
// pair (A-, A+); the predicates below (singularity, idempotency, nilpotency)
// are exact decision procedures on the components.
#pragma once

#include "bicomplex/complex_matrix.hpp"
#include "bicomplex/scalar.hpp"

#include <cstddef>
#include <optional>
#include <ostream>
#include <utility>
#include <vector>

namespace bcx {

struct NilpotencyReport {
    bool is_nilpotent = false;
    // Present iff is_nilpotent; index = max(component_indices).
    std::optional<std::size_t> index;
    std::optional<std::pair<std::size_t, std::size_t>> component_indices;
};

struct SingularityReport {
    bool is_singular = false;
    bool minus_singular = false;
    bool plus_singular = false;
    RationalComplex det_minus;
    RationalComplex det_plus;
};

class BicomplexMatrix {
public:
    // compose: stores the component pair; decomposition accessors are the
    // exact inverse.
    BicomplexMatrix(ComplexMatrix minus, ComplexMatrix plus)
        : minus_(std::move(minus)), plus_(std::move(plus)) {
        if (!minus_.same_shape(plus_))
            throw ShapeMismatch("component matrices must have identical shape");
    }

    static BicomplexMatrix compose(ComplexMatrix minus, ComplexMatrix plus) {
        return {std::move(minus), std::move(plus)};
    }

    // Builds the decomposition of the matrix [z1_ij + i2 * z2_ij] from its
    // two cartesian component grids, entrywise.
    static BicomplexMatrix from_cartesian(const ComplexMatrix& z1, const ComplexMatrix& z2) {
        if (!z1.same_shape(z2)) throw ShapeMismatch("cartesian grids must have identical shape");
        ComplexMatrix minus(z1.rows(), z1.cols());
        ComplexMatrix plus(z1.rows(), z1.cols());
        for (std::size_t i = 0; i < z1.rows(); ++i)
            for (std::size_t j = 0; j < z1.cols(); ++j) {
                BicomplexScalar s = BicomplexScalar::from_cartesian_pair(z1(i, j), z2(i, j));
                minus(i, j) = s.minus;
                plus(i, j) = s.plus;
            }
        return {std::move(minus), std::move(plus)};
    }

    static BicomplexMatrix zero(std::size_t rows, std::size_t cols) {
        return {ComplexMatrix::zero(rows, cols), ComplexMatrix::zero(rows, cols)};
    }

    static BicomplexMatrix identity(std::size_t n) {
        return {ComplexMatrix::identity(n), ComplexMatrix::identity(n)};
    }

    const ComplexMatrix& minus() const { return minus_; }
    const ComplexMatrix& plus() const { return plus_; }

    std::size_t rows() const { return minus_.rows(); }
    std::size_t cols() const { return minus_.cols(); }
    bool is_square() const { return minus_.is_square(); }

    BicomplexScalar entry(std::size_t i, std::size_t j) const {
        return {minus_(i, j), plus_(i, j)};
    }
    void set_entry(std::size_t i, std::size_t j, const BicomplexScalar& s) {
        minus_(i, j) = s.minus;
        plus_(i, j) = s.plus;
    }

    bool is_zero() const { return minus_.is_zero() && plus_.is_zero(); }

    BicomplexMatrix operator-() const { return {-minus_, -plus_}; }

    friend BicomplexMatrix operator+(const BicomplexMatrix& a, const BicomplexMatrix& b) {
        return {a.minus_ + b.minus_, a.plus_ + b.plus_};
    }
    friend BicomplexMatrix operator-(const BicomplexMatrix& a, const BicomplexMatrix& b) {
        return {a.minus_ - b.minus_, a.plus_ - b.plus_};
    }
    friend BicomplexMatrix operator*(const BicomplexMatrix& a, const BicomplexMatrix& b) {
        return {a.minus_ * b.minus_, a.plus_ * b.plus_};
    }

    // Bicomplex scalar product: e1(s^- A^-) + e2(s^+ A^+).
    friend BicomplexMatrix operator*(const BicomplexScalar& s, const BicomplexMatrix& a) {
        return {s.minus * a.minus_, s.plus * a.plus_};
    }

    friend bool operator==(const BicomplexMatrix& a, const BicomplexMatrix& b) {
        return a.minus_ == b.minus_ && a.plus_ == b.plus_;
    }
    friend bool operator!=(const BicomplexMatrix& a, const BicomplexMatrix& b) { return !(a == b); }

    friend std::ostream& operator<<(std::ostream& os, const BicomplexMatrix& m) {
        return os << "e1 *\n" << m.minus_ << "\n+ e2 *\n" << m.plus_;
    }

private:
    ComplexMatrix minus_;
    ComplexMatrix plus_;
};

inline BicomplexMatrix power(const BicomplexMatrix& a, unsigned long k) {
    if (!a.is_square()) throw NotSquare("matrix power requires a square matrix");
    return {power(a.minus(), k), power(a.plus(), k)};
}

// Smallest k <= n with m^k = 0, if any. k = 1 means the zero matrix; an
// n x n nilpotent matrix always has index <= n, so this is a decision
// procedure, not a heuristic.
inline std::optional<std::size_t> nilpotency_index(const ComplexMatrix& m) {
    if (!m.is_square()) throw NotSquare("nilpotency requires a square matrix");
    ComplexMatrix p = m;
    for (std::size_t k = 1; k <= m.rows(); ++k) {
        if (p.is_zero()) return k;
        if (k < m.rows()) p = p * m;
    }
    return std::nullopt;
}

inline NilpotencyReport nilpotency(const BicomplexMatrix& a) {
    if (!a.is_square()) throw NotSquare("nilpotency requires a square matrix");
    NilpotencyReport report;
    auto k1 = nilpotency_index(a.minus());
    auto k2 = nilpotency_index(a.plus());
    if (k1 && k2) {
        report.is_nilpotent = true;
        report.component_indices = {*k1, *k2};
        report.index = std::max(*k1, *k2);
    }
    return report;
}

// A is singular iff at least one component determinant vanishes.
inline SingularityReport singularity(const BicomplexMatrix& a) {
    if (!a.is_square()) throw NotSquare("singularity requires a square matrix");
    SingularityReport report;
    report.det_minus = determinant(a.minus());
    report.det_plus = determinant(a.plus());
    report.minus_singular = report.det_minus.is_zero();
    report.plus_singular = report.det_plus.is_zero();
    report.is_singular = report.minus_singular || report.plus_singular;
    return report;
}

inline bool is_singular(const BicomplexMatrix& a) { return singularity(a).is_singular; }

// A^2 = A, equivalently both components are idempotent.
inline bool is_idempotent(const BicomplexMatrix& a) {
    if (!a.is_square()) throw NotSquare("idempotency requires a square matrix");
    return a.minus() * a.minus() == a.minus() && a.plus() * a.plus() == a.plus();
}

// e1 * A = e1 A^-: keeps the minus component, zeroes the plus component.
inline BicomplexMatrix section_e1(const BicomplexMatrix& a) {
    return {a.minus(), ComplexMatrix::zero(a.rows(), a.cols())};
}

// e2 * A = e2 A^+.
inline BicomplexMatrix section_e2(const BicomplexMatrix& a) {
    return {ComplexMatrix::zero(a.rows(), a.cols()), a.plus()};
}

// e1 A + e2 B; idempotent whenever A and B are.
inline BicomplexMatrix mix(const BicomplexMatrix& a, const BicomplexMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw ShapeMismatch("mix requires equal shapes");
    if (!a.is_square()) throw NotSquare("mix requires square matrices");
    return {a.minus(), b.plus()};
}

// I - A.
inline BicomplexMatrix complement(const BicomplexMatrix& a) {
    if (!a.is_square()) throw NotSquare("complement requires a square matrix");
    return BicomplexMatrix::identity(a.rows()) - a;
}

// e1(I - A) for idempotent A; the result is idempotent.
inline BicomplexMatrix complement_section_e1(const BicomplexMatrix& a) {
    if (!a.is_square()) throw NotSquare("complement section requires a square matrix");
    if (!is_idempotent(a)) throw NotIdempotent("complement section requires an idempotent matrix");
    return {ComplexMatrix::identity(a.rows()) - a.minus(), ComplexMatrix::zero(a.rows(), a.cols())};
}

// e2(I - A) for idempotent A.
inline BicomplexMatrix complement_section_e2(const BicomplexMatrix& a) {
    if (!a.is_square()) throw NotSquare("complement section requires a square matrix");
    if (!is_idempotent(a)) throw NotIdempotent("complement section requires an idempotent matrix");
    return {ComplexMatrix::zero(a.rows(), a.cols()), ComplexMatrix::identity(a.rows()) - a.plus()};
}

} // namespace bcx
