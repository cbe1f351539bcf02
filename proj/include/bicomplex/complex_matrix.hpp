// Dense matrices over RationalComplex: the component matrices A-, A+.
#pragma once

#include "bicomplex/errors.hpp"
#include "bicomplex/rational_complex.hpp"

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <utility>
#include <vector>

namespace bcx {

class ComplexMatrix {
public:
    // Zero-filled. Dimensions must be >= 1.
    ComplexMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols) {
        if (rows == 0 || cols == 0) throw ShapeMismatch("matrix dimensions must be at least 1x1");
    }

    ComplexMatrix(std::initializer_list<std::initializer_list<RationalComplex>> grid)
        : ComplexMatrix(grid.size(), grid.size() ? grid.begin()->size() : 0) {
        std::size_t i = 0;
        for (const auto& row : grid) {
            if (row.size() != cols_) throw ShapeMismatch("ragged initializer grid");
            std::size_t j = 0;
            for (const auto& z : row) entries_[i * cols_ + j++] = z;
            ++i;
        }
    }

    static ComplexMatrix zero(std::size_t rows, std::size_t cols) { return {rows, cols}; }

    static ComplexMatrix identity(std::size_t n) {
        ComplexMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = RationalComplex::one();
        return m;
    }

    static ComplexMatrix diagonal(const std::vector<RationalComplex>& d) {
        ComplexMatrix m(d.size(), d.size());
        for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }
    bool same_shape(const ComplexMatrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_; }

    RationalComplex& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const RationalComplex& operator()(std::size_t i, std::size_t j) const {
        return entries_[i * cols_ + j];
    }

    bool is_zero() const {
        for (const auto& z : entries_)
            if (!z.is_zero()) return false;
        return true;
    }

    ComplexMatrix operator-() const {
        ComplexMatrix r = *this;
        for (auto& z : r.entries_) z = -z;
        return r;
    }

    ComplexMatrix& operator+=(const ComplexMatrix& o) {
        if (!same_shape(o)) throw ShapeMismatch("matrix addition requires equal shapes");
        for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] += o.entries_[k];
        return *this;
    }
    ComplexMatrix& operator-=(const ComplexMatrix& o) {
        if (!same_shape(o)) throw ShapeMismatch("matrix subtraction requires equal shapes");
        for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] -= o.entries_[k];
        return *this;
    }

    friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { a += b; return a; }
    friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { a -= b; return a; }

    friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
        if (a.cols_ != b.rows_) throw ShapeMismatch("matrix product requires inner dimensions to agree");
        ComplexMatrix r(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const RationalComplex& aik = a(i, k);
                if (aik.is_zero()) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) r(i, j) += aik * b(k, j);
            }
        return r;
    }

    friend ComplexMatrix operator*(const RationalComplex& s, ComplexMatrix m) {
        for (auto& z : m.entries_) z = s * z;
        return m;
    }

    friend bool operator==(const ComplexMatrix& a, const ComplexMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
    }
    friend bool operator!=(const ComplexMatrix& a, const ComplexMatrix& b) { return !(a == b); }

    friend std::ostream& operator<<(std::ostream& os, const ComplexMatrix& m) {
        for (std::size_t i = 0; i < m.rows_; ++i) {
            os << (i == 0 ? "[" : " ");
            for (std::size_t j = 0; j < m.cols_; ++j) os << (j ? ", " : "[") << m(i, j);
            os << "]" << (i + 1 == m.rows_ ? "]" : "\n");
        }
        return os;
    }

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<RationalComplex> entries_;
};

inline RationalComplex trace(const ComplexMatrix& m) {
    if (!m.is_square()) throw NotSquare("trace requires a square matrix");
    RationalComplex t;
    for (std::size_t i = 0; i < m.rows(); ++i) t += m(i, i);
    return t;
}

// k-th power by repeated squaring; power 0 is the identity.
inline ComplexMatrix power(const ComplexMatrix& m, unsigned long k) {
    if (!m.is_square()) throw NotSquare("matrix power requires a square matrix");
    ComplexMatrix result = ComplexMatrix::identity(m.rows());
    ComplexMatrix base = m;
    while (k > 0) {
        if (k & 1) result = result * base;
        k >>= 1;
        if (k > 0) base = base * base;
    }
    return result;
}

// Exact determinant by fraction-free (Bareiss) elimination: every division
// below is by a previous pivot and is exact, so for integer-valued input all
// intermediates stay integer-valued, which bounds coefficient growth.
inline RationalComplex determinant(const ComplexMatrix& m) {
    if (!m.is_square()) throw NotSquare("determinant requires a square matrix");
    const std::size_t n = m.rows();
    ComplexMatrix w = m;
    RationalComplex prev = RationalComplex::one();
    bool negate = false;

    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (w(k, k).is_zero()) {
            std::size_t pivot = k + 1;
            while (pivot < n && w(pivot, k).is_zero()) ++pivot;
            if (pivot == n) return RationalComplex::zero();
            for (std::size_t j = k; j < n; ++j) std::swap(w(k, j), w(pivot, j));
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                RationalComplex num = w(i, j) * w(k, k) - w(i, k) * w(k, j);
                w(i, j) = num / prev;
            }
            w(i, k) = RationalComplex::zero();
        }
        prev = w(k, k);
    }
    RationalComplex det = w(n - 1, n - 1);
    return negate ? -det : det;
}

// Exact Gauss-Jordan inverse; nullopt when the matrix is singular.
inline std::optional<ComplexMatrix> inverse(const ComplexMatrix& m) {
    if (!m.is_square()) throw NotSquare("inverse requires a square matrix");
    const std::size_t n = m.rows();
    ComplexMatrix w = m;
    ComplexMatrix inv = ComplexMatrix::identity(n);

    for (std::size_t k = 0; k < n; ++k) {
        std::size_t pivot = k;
        while (pivot < n && w(pivot, k).is_zero()) ++pivot;
        if (pivot == n) return std::nullopt;
        if (pivot != k)
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(w(k, j), w(pivot, j));
                std::swap(inv(k, j), inv(pivot, j));
            }
        RationalComplex scale = w(k, k).inverse();
        for (std::size_t j = 0; j < n; ++j) {
            w(k, j) = scale * w(k, j);
            inv(k, j) = scale * inv(k, j);
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k || w(i, k).is_zero()) continue;
            RationalComplex factor = w(i, k);
            for (std::size_t j = 0; j < n; ++j) {
                w(i, j) -= factor * w(k, j);
                inv(i, j) -= factor * inv(k, j);
            }
        }
    }
    return inv;
}

} // namespace bcx
