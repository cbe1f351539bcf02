// Builds the analysis report the CLI prints: shape, entry classification,
// and the idempotency / nilpotency / singularity predicates. Square-only
// predicates are reported as "not applicable" on rectangular input rather
// than erroring. Exact mode ignores the tolerance; float mode applies it as
// described in float_matrix.hpp.
#pragma once

#include "bicomplex/float_matrix.hpp"
#include "bicomplex/io.hpp"
#include "bicomplex/matrix.hpp"

#include <cstdio>
#include <optional>
#include <sstream>
#include <string>

namespace bcx {

enum class Mode { Exact, Float };

inline const char* to_string(Mode m) { return m == Mode::Exact ? "exact" : "float"; }

struct AnalysisReport {
    std::string kind = "matrix";
    std::size_t rows = 0, cols = 0;
    std::string encoding = "idempotent";
    Mode mode = Mode::Exact;
    double tolerance = 1e-9; // consulted in float mode only
    bool square = false;

    std::size_t entries_zero = 0;
    std::size_t entries_invertible = 0;
    std::size_t entries_zero_divisor = 0;

    // Square-only predicates; nullopt means not applicable.
    std::optional<bool> idempotent;
    std::optional<NilpotencyReport> nilpotent;
    std::optional<bool> singular;
    std::optional<bool> minus_singular;
    std::optional<bool> plus_singular;
    std::string det_minus; // rendered determinants, empty when not applicable
    std::string det_plus;
};

namespace detail {

inline std::string render_float(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

inline std::string render_float_complex(const FloatComplex& z) {
    std::string re = render_float(z.real());
    std::string im = render_float(std::abs(z.imag()));
    return re + (std::signbit(z.imag()) ? "-" : "+") + im + "i";
}

} // namespace detail

inline AnalysisReport analyze(const BicomplexMatrix& m, io::FileKind kind,
                              io::Encoding source_encoding) {
    AnalysisReport r;
    r.kind = io::to_string(kind);
    r.encoding = io::to_string(source_encoding);
    r.mode = Mode::Exact;
    r.rows = m.rows();
    r.cols = m.cols();
    r.square = m.is_square();

    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            switch (classify(m.entry(i, j))) {
                case ScalarClass::Zero: ++r.entries_zero; break;
                case ScalarClass::Invertible: ++r.entries_invertible; break;
                case ScalarClass::ZeroDivisor: ++r.entries_zero_divisor; break;
            }
        }

    if (r.square) {
        r.idempotent = is_idempotent(m);
        r.nilpotent = nilpotency(m);
        SingularityReport s = singularity(m);
        r.singular = s.is_singular;
        r.minus_singular = s.minus_singular;
        r.plus_singular = s.plus_singular;
        r.det_minus = s.det_minus.to_string();
        r.det_plus = s.det_plus.to_string();
    }
    return r;
}

inline AnalysisReport analyze(const FloatBicomplexMatrix& m, io::FileKind kind,
                              io::Encoding source_encoding, double tol) {
    AnalysisReport r;
    r.kind = io::to_string(kind);
    r.encoding = io::to_string(source_encoding);
    r.mode = Mode::Float;
    r.tolerance = tol;
    r.rows = m.rows();
    r.cols = m.cols();
    r.square = m.is_square();

    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            switch (entry_class(m, i, j, tol)) {
                case ScalarClass::Zero: ++r.entries_zero; break;
                case ScalarClass::Invertible: ++r.entries_invertible; break;
                case ScalarClass::ZeroDivisor: ++r.entries_zero_divisor; break;
            }
        }

    if (r.square) {
        r.idempotent = is_idempotent(m, tol);
        r.nilpotent = nilpotency(m, tol);
        FloatSingularityReport s = singularity(m, tol);
        r.singular = s.is_singular;
        r.minus_singular = s.minus_singular;
        r.plus_singular = s.plus_singular;
        r.det_minus = detail::render_float_complex(s.det_minus);
        r.det_plus = detail::render_float_complex(s.det_plus);
    }
    return r;
}

inline io::json to_json(const AnalysisReport& r) {
    io::json doc = {
        {"kind", r.kind},
        {"shape", {{"rows", r.rows}, {"cols", r.cols}}},
        {"encoding", r.encoding},
        {"mode", to_string(r.mode)},
        {"tolerance", r.mode == Mode::Float ? io::json(r.tolerance) : io::json(nullptr)},
        {"square", r.square},
        {"entry_classes",
         {{"zero", r.entries_zero},
          {"invertible", r.entries_invertible},
          {"zero_divisor", r.entries_zero_divisor}}},
    };
    doc["idempotent"] = r.idempotent ? io::json(*r.idempotent) : io::json(nullptr);
    if (r.nilpotent) {
        io::json nil = {{"is_nilpotent", r.nilpotent->is_nilpotent}};
        nil["index"] =
            r.nilpotent->index ? io::json(*r.nilpotent->index) : io::json(nullptr);
        nil["component_indices"] =
            r.nilpotent->component_indices
                ? io::json(io::json::array({r.nilpotent->component_indices->first,
                                            r.nilpotent->component_indices->second}))
                : io::json(nullptr);
        doc["nilpotency"] = std::move(nil);
    } else {
        doc["nilpotency"] = nullptr;
    }
    if (r.singular) {
        doc["singularity"] = {{"is_singular", *r.singular},
                              {"minus_singular", *r.minus_singular},
                              {"plus_singular", *r.plus_singular},
                              {"det_minus", r.det_minus},
                              {"det_plus", r.det_plus}};
    } else {
        doc["singularity"] = nullptr;
    }
    return doc;
}

// Human-readable rendering; contains every structured field.
inline std::string to_text(const AnalysisReport& r) {
    std::ostringstream out;
    out << "kind:         " << r.kind << "\n";
    out << "shape:        " << r.rows << " x " << r.cols << "\n";
    out << "encoding:     " << r.encoding << "\n";
    out << "mode:         " << to_string(r.mode) << "\n";
    if (r.mode == Mode::Float)
        out << "tolerance:    " << detail::render_float(r.tolerance) << "\n";
    else
        out << "tolerance:    none (exact arithmetic)\n";
    out << "square:       " << (r.square ? "yes" : "no") << "\n";
    out << "entries:      " << r.entries_zero << " zero, " << r.entries_invertible
        << " invertible, " << r.entries_zero_divisor << " zero-divisor\n";

    if (!r.square) {
        out << "idempotent:   not applicable (rectangular)\n";
        out << "nilpotency:   not applicable (rectangular)\n";
        out << "singularity:  not applicable (rectangular)\n";
        return out.str();
    }

    out << "idempotent:   " << (*r.idempotent ? "yes" : "no") << "\n";
    if (r.nilpotent->is_nilpotent)
        out << "nilpotency:   nilpotent, index " << *r.nilpotent->index << " (components "
            << r.nilpotent->component_indices->first << ", "
            << r.nilpotent->component_indices->second << ")\n";
    else
        out << "nilpotency:   not nilpotent\n";
    out << "singularity:  " << (*r.singular ? "singular" : "regular") << " (minus component "
        << (*r.minus_singular ? "singular" : "regular") << ", plus component "
        << (*r.plus_singular ? "singular" : "regular") << ")\n";
    out << "det(minus):   " << r.det_minus << "\n";
    out << "det(plus):    " << r.det_plus << "\n";
    return out.str();
}

} // namespace bcx
