// Double-precision mirror of the matrix layer, used only by the CLI for
// lossy input. Zero tests are relative: a derived matrix P counts as zero
// when max-norm(P) <= tol * (1 + max-norm(A)) for the input A; exact mode
// never consults a tolerance.
#pragma once

#include "bicomplex/matrix.hpp"

#include <complex>
#include <cstddef>
#include <utility>
#include <vector>

namespace bcx {

using FloatComplex = std::complex<double>;

class FloatComplexMatrix {
public:
    FloatComplexMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols) {
        if (rows == 0 || cols == 0) throw ShapeMismatch("matrix dimensions must be at least 1x1");
    }

    static FloatComplexMatrix identity(std::size_t n) {
        FloatComplexMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    FloatComplex& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const FloatComplex& operator()(std::size_t i, std::size_t j) const {
        return entries_[i * cols_ + j];
    }

    friend FloatComplexMatrix operator*(const FloatComplexMatrix& a, const FloatComplexMatrix& b) {
        if (a.cols_ != b.rows_) throw ShapeMismatch("matrix product requires inner dimensions to agree");
        FloatComplexMatrix r(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                FloatComplex aik = a(i, k);
                if (aik == 0.0) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) r(i, j) += aik * b(k, j);
            }
        return r;
    }

    friend FloatComplexMatrix operator-(const FloatComplexMatrix& a, const FloatComplexMatrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            throw ShapeMismatch("matrix subtraction requires equal shapes");
        FloatComplexMatrix r(a.rows_, a.cols_);
        for (std::size_t k = 0; k < r.entries_.size(); ++k)
            r.entries_[k] = a.entries_[k] - b.entries_[k];
        return r;
    }

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<FloatComplex> entries_;
};

struct FloatBicomplexMatrix {
    FloatComplexMatrix minus;
    FloatComplexMatrix plus;

    FloatBicomplexMatrix(FloatComplexMatrix m, FloatComplexMatrix p)
        : minus(std::move(m)), plus(std::move(p)) {
        if (minus.rows() != plus.rows() || minus.cols() != plus.cols())
            throw ShapeMismatch("component matrices must have identical shape");
    }

    std::size_t rows() const { return minus.rows(); }
    std::size_t cols() const { return minus.cols(); }
    bool is_square() const { return minus.is_square(); }
};

inline FloatComplexMatrix to_float(const ComplexMatrix& m) {
    FloatComplexMatrix f(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            f(i, j) = {m(i, j).re.to_double(), m(i, j).im.to_double()};
    return f;
}

inline FloatBicomplexMatrix to_float(const BicomplexMatrix& m) {
    return {to_float(m.minus()), to_float(m.plus())};
}

inline double max_norm(const FloatComplexMatrix& m) {
    double worst = 0.0;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) worst = std::max(worst, std::abs(m(i, j)));
    return worst;
}

inline double max_norm(const FloatBicomplexMatrix& m) {
    return std::max(max_norm(m.minus), max_norm(m.plus));
}

inline bool approx_zero(const FloatComplexMatrix& m, double tol, double scale) {
    return max_norm(m) <= tol * scale;
}

// A^2 = A within max-norm(A^2 - A) <= tol * (1 + max-norm(A)).
inline bool is_idempotent(const FloatBicomplexMatrix& a, double tol) {
    if (!a.is_square()) throw NotSquare("idempotency requires a square matrix");
    double scale = 1.0 + max_norm(a);
    return approx_zero(a.minus * a.minus - a.minus, tol, scale) &&
           approx_zero(a.plus * a.plus - a.plus, tol, scale);
}

inline std::optional<std::size_t> nilpotency_index(const FloatComplexMatrix& m, double tol) {
    if (!m.is_square()) throw NotSquare("nilpotency requires a square matrix");
    double scale = 1.0 + max_norm(m);
    FloatComplexMatrix p = m;
    for (std::size_t k = 1; k <= m.rows(); ++k) {
        if (approx_zero(p, tol, scale)) return k;
        if (k < m.rows()) p = p * m;
    }
    return std::nullopt;
}

inline NilpotencyReport nilpotency(const FloatBicomplexMatrix& a, double tol) {
    if (!a.is_square()) throw NotSquare("nilpotency requires a square matrix");
    NilpotencyReport report;
    auto k1 = nilpotency_index(a.minus, tol);
    auto k2 = nilpotency_index(a.plus, tol);
    if (k1 && k2) {
        report.is_nilpotent = true;
        report.component_indices = {*k1, *k2};
        report.index = std::max(*k1, *k2);
    }
    return report;
}

namespace detail {

// (a + bi) / (c + di) as num * conj(prev) / |prev|^2, spelled out in real
// arithmetic. std::complex division rescales internally and rounds even when
// the true quotient is a Gaussian integer; this form divides two exactly
// representable integers per part, so Bareiss quotients on integer-valued
// input come out exact.
inline FloatComplex exactish_div(const FloatComplex& num, const FloatComplex& den) {
    double n2 = den.real() * den.real() + den.imag() * den.imag();
    return {(num.real() * den.real() + num.imag() * den.imag()) / n2,
            (num.imag() * den.real() - num.real() * den.imag()) / n2};
}

} // namespace detail

// Fraction-free elimination mirroring the exact routine, with max-modulus
// pivoting. On integer-valued input every intermediate is integer-valued,
// so the result is exact whenever it fits in a double.
inline FloatComplex determinant(const FloatComplexMatrix& m) {
    if (!m.is_square()) throw NotSquare("determinant requires a square matrix");
    const std::size_t n = m.rows();
    FloatComplexMatrix w = m;
    FloatComplex prev = 1.0;
    bool negate = false;

    for (std::size_t k = 0; k + 1 < n; ++k) {
        std::size_t pivot = k;
        for (std::size_t i = k + 1; i < n; ++i)
            if (std::abs(w(i, k)) > std::abs(w(pivot, k))) pivot = i;
        if (w(pivot, k) == 0.0) return 0.0;
        if (pivot != k) {
            for (std::size_t j = k; j < n; ++j) std::swap(w(k, j), w(pivot, j));
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                w(i, j) = detail::exactish_div(w(i, j) * w(k, k) - w(i, k) * w(k, j), prev);
            w(i, k) = 0.0;
        }
        prev = w(k, k);
    }
    FloatComplex det = w(n - 1, n - 1);
    return negate ? -det : det;
}

struct FloatSingularityReport {
    bool is_singular = false;
    bool minus_singular = false;
    bool plus_singular = false;
    FloatComplex det_minus;
    FloatComplex det_plus;
};

inline FloatSingularityReport singularity(const FloatBicomplexMatrix& a, double tol) {
    if (!a.is_square()) throw NotSquare("singularity requires a square matrix");
    FloatSingularityReport report;
    report.det_minus = determinant(a.minus);
    report.det_plus = determinant(a.plus);
    report.minus_singular = std::abs(report.det_minus) <= tol * (1.0 + max_norm(a.minus));
    report.plus_singular = std::abs(report.det_plus) <= tol * (1.0 + max_norm(a.plus));
    report.is_singular = report.minus_singular || report.plus_singular;
    return report;
}

// Entry-level class at tolerance: a component counts as zero below
// tol * (1 + max-norm of the whole matrix).
inline ScalarClass entry_class(const FloatBicomplexMatrix& a, std::size_t i, std::size_t j,
                               double tol) {
    double scale = 1.0 + max_norm(a);
    bool m0 = std::abs(a.minus(i, j)) <= tol * scale;
    bool p0 = std::abs(a.plus(i, j)) <= tol * scale;
    if (m0 && p0) return ScalarClass::Zero;
    if (m0 || p0) return ScalarClass::ZeroDivisor;
    return ScalarClass::Invertible;
}

} // namespace bcx
