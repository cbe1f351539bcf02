// The matrix file format: a JSON document with fields
//   version   integer, currently 1
//   kind      "matrix" | "operator" | "basis"   (default "matrix")
//   shape     {"rows": m, "cols": n}
//   encoding  "idempotent" | "cartesian" (matrix/operator), "complex" (basis)
//   entries   row-major nested arrays of entry objects
//   metadata  optional object, passed through untouched
//
// Idempotent entries are {"minus": {"re": "p/q", "im": "p/q"}, "plus": ...};
// cartesian entries are {"u1": "p/q", ..., "u4": "p/q"}; basis entries are a
// single {"re", "im"} object. Rationals are strings "p/q" or integer
// strings; non-reduced or negative-denominator forms are normalized, never
// rejected. The float loader additionally accepts plain JSON numbers.
#pragma once

#include "bicomplex/errors.hpp"
#include "bicomplex/float_matrix.hpp"
#include "bicomplex/matrix.hpp"

#include <json.hpp>

#include <fstream>
#include <optional>
#include <sstream>
#include <string>

namespace bcx::io {

using json = nlohmann::ordered_json;

inline constexpr int kFormatVersion = 1;

enum class FileKind { Matrix, Operator, Basis };
enum class Encoding { Idempotent, Cartesian, Complex };

inline const char* to_string(FileKind k) {
    switch (k) {
        case FileKind::Matrix: return "matrix";
        case FileKind::Operator: return "operator";
        case FileKind::Basis: return "basis";
    }
    return "?";
}

inline const char* to_string(Encoding e) {
    switch (e) {
        case Encoding::Idempotent: return "idempotent";
        case Encoding::Cartesian: return "cartesian";
        case Encoding::Complex: return "complex";
    }
    return "?";
}

struct Document {
    FileKind kind = FileKind::Matrix;
    Encoding encoding = Encoding::Idempotent;
    std::optional<BicomplexMatrix> matrix; // kind matrix/operator
    std::optional<ComplexMatrix> basis;    // kind basis
    json metadata;                         // null when absent
};

struct FloatDocument {
    FileKind kind = FileKind::Matrix;
    Encoding encoding = Encoding::Idempotent;
    std::optional<FloatBicomplexMatrix> matrix;
    json metadata;
};

namespace detail {

inline Rational parse_rational(const json& value, const std::string& ctx) {
    if (!value.is_string())
        throw ParseError("rational values must be strings like \"p/q\"", ctx);
    auto r = Rational::from_string(value.get<std::string>());
    if (!r) throw ParseError("bad rational \"" + value.get<std::string>() + "\"", ctx);
    return *r;
}

inline double parse_number(const json& value, const std::string& ctx) {
    if (value.is_number()) return value.get<double>();
    if (value.is_string()) {
        auto r = Rational::from_string(value.get<std::string>());
        if (!r) throw ParseError("bad rational \"" + value.get<std::string>() + "\"", ctx);
        return r->to_double();
    }
    throw ParseError("entry values must be rational strings or numbers", ctx);
}

inline const json& field(const json& obj, const char* name, const std::string& ctx) {
    if (!obj.is_object() || !obj.contains(name))
        throw ParseError(std::string("missing field \"") + name + "\"", ctx);
    return obj.at(name);
}

inline RationalComplex parse_complex(const json& obj, const std::string& ctx) {
    return {parse_rational(field(obj, "re", ctx), ctx + ".re"),
            parse_rational(field(obj, "im", ctx), ctx + ".im")};
}

inline json complex_to_json(const RationalComplex& z) {
    return {{"re", z.re.to_string()}, {"im", z.im.to_string()}};
}

inline BicomplexScalar parse_entry(const json& obj, Encoding enc, const std::string& ctx) {
    if (enc == Encoding::Idempotent)
        return {parse_complex(field(obj, "minus", ctx), ctx + ".minus"),
                parse_complex(field(obj, "plus", ctx), ctx + ".plus")};
    return BicomplexScalar::from_real_quad(parse_rational(field(obj, "u1", ctx), ctx + ".u1"),
                                           parse_rational(field(obj, "u2", ctx), ctx + ".u2"),
                                           parse_rational(field(obj, "u3", ctx), ctx + ".u3"),
                                           parse_rational(field(obj, "u4", ctx), ctx + ".u4"));
}

inline std::pair<FloatComplex, FloatComplex> parse_entry_float(const json& obj, Encoding enc,
                                                               const std::string& ctx) {
    if (enc == Encoding::Idempotent) {
        const json& m = field(obj, "minus", ctx);
        const json& p = field(obj, "plus", ctx);
        return {{parse_number(field(m, "re", ctx), ctx + ".minus.re"),
                 parse_number(field(m, "im", ctx), ctx + ".minus.im")},
                {parse_number(field(p, "re", ctx), ctx + ".plus.re"),
                 parse_number(field(p, "im", ctx), ctx + ".plus.im")}};
    }
    double u1 = parse_number(field(obj, "u1", ctx), ctx + ".u1");
    double u2 = parse_number(field(obj, "u2", ctx), ctx + ".u2");
    double u3 = parse_number(field(obj, "u3", ctx), ctx + ".u3");
    double u4 = parse_number(field(obj, "u4", ctx), ctx + ".u4");
    return {{u1 + u4, u2 - u3}, {u1 - u4, u2 + u3}};
}

inline json entry_to_json(const BicomplexScalar& s, Encoding enc) {
    if (enc == Encoding::Idempotent)
        return {{"minus", complex_to_json(s.minus)}, {"plus", complex_to_json(s.plus)}};
    auto u = s.to_real_quad();
    return {{"u1", u[0].to_string()},
            {"u2", u[1].to_string()},
            {"u3", u[2].to_string()},
            {"u4", u[3].to_string()}};
}

struct Header {
    FileKind kind;
    Encoding encoding;
    std::size_t rows;
    std::size_t cols;
    const json* entries;
    json metadata;
};

inline Header parse_header(const json& doc, const std::string& ctx) {
    if (!doc.is_object()) throw ParseError("document must be a JSON object", ctx);

    const json& version = field(doc, "version", ctx);
    if (!version.is_number_integer() || version.get<int>() != kFormatVersion)
        throw ParseError("unsupported version (expected 1)", ctx + ".version");

    Header h{FileKind::Matrix, Encoding::Idempotent, 0, 0, nullptr, nullptr};
    if (doc.contains("kind")) {
        const json& kind = doc.at("kind");
        if (kind == "matrix") h.kind = FileKind::Matrix;
        else if (kind == "operator") h.kind = FileKind::Operator;
        else if (kind == "basis") h.kind = FileKind::Basis;
        else throw ParseError("unknown kind", ctx + ".kind");
    }

    const json& enc = field(doc, "encoding", ctx);
    if (enc == "idempotent") h.encoding = Encoding::Idempotent;
    else if (enc == "cartesian") h.encoding = Encoding::Cartesian;
    else if (enc == "complex") h.encoding = Encoding::Complex;
    else throw ParseError("unknown encoding", ctx + ".encoding");

    if (h.kind == FileKind::Basis && h.encoding != Encoding::Complex)
        throw ParseError("basis files use the \"complex\" encoding", ctx + ".encoding");
    if (h.kind != FileKind::Basis && h.encoding == Encoding::Complex)
        throw ParseError("\"complex\" encoding is reserved for basis files", ctx + ".encoding");

    const json& shape = field(doc, "shape", ctx);
    const json& rows = field(shape, "rows", ctx + ".shape");
    const json& cols = field(shape, "cols", ctx + ".shape");
    if (!rows.is_number_integer() || !cols.is_number_integer() || rows.get<long>() < 1 ||
        cols.get<long>() < 1)
        throw ParseError("shape fields must be positive integers", ctx + ".shape");
    h.rows = rows.get<std::size_t>();
    h.cols = cols.get<std::size_t>();

    h.entries = &field(doc, "entries", ctx);
    if (!h.entries->is_array() || h.entries->size() != h.rows)
        throw ParseError("entries must be an array with one row per shape row", ctx + ".entries");

    if (doc.contains("metadata")) {
        if (!doc.at("metadata").is_object())
            throw ParseError("metadata must be an object", ctx + ".metadata");
        h.metadata = doc.at("metadata");
    }
    return h;
}

inline const json& entry_at(const Header& h, std::size_t i, std::size_t j, const std::string& ctx,
                            std::string& entry_ctx) {
    const json& row = (*h.entries)[i];
    entry_ctx = ctx + ".entries[" + std::to_string(i) + "][" + std::to_string(j) + "]";
    if (!row.is_array() || row.size() != h.cols)
        throw ParseError("row length must equal shape cols",
                         ctx + ".entries[" + std::to_string(i) + "]");
    return row[j];
}

} // namespace detail

inline json to_json(const BicomplexMatrix& m, FileKind kind = FileKind::Matrix,
                    Encoding enc = Encoding::Idempotent, json metadata = nullptr) {
    if (kind == FileKind::Basis) throw BadSpec("basis documents take a complex matrix");
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j)
            row.push_back(detail::entry_to_json(m.entry(i, j), enc));
        rows.push_back(std::move(row));
    }
    json doc = {{"version", kFormatVersion},
                {"kind", to_string(kind)},
                {"shape", {{"rows", m.rows()}, {"cols", m.cols()}}},
                {"encoding", to_string(enc)},
                {"entries", std::move(rows)}};
    if (!metadata.is_null()) doc["metadata"] = std::move(metadata);
    return doc;
}

inline json basis_to_json(const ComplexMatrix& p, json metadata = nullptr) {
    json rows = json::array();
    for (std::size_t i = 0; i < p.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < p.cols(); ++j)
            row.push_back(detail::complex_to_json(p(i, j)));
        rows.push_back(std::move(row));
    }
    json doc = {{"version", kFormatVersion},
                {"kind", "basis"},
                {"shape", {{"rows", p.rows()}, {"cols", p.cols()}}},
                {"encoding", "complex"},
                {"entries", std::move(rows)}};
    if (!metadata.is_null()) doc["metadata"] = std::move(metadata);
    return doc;
}

inline Document from_json(const json& doc, const std::string& ctx = "document") {
    detail::Header h = detail::parse_header(doc, ctx);
    Document out;
    out.kind = h.kind;
    out.encoding = h.encoding;
    out.metadata = std::move(h.metadata);

    std::string ectx;
    if (h.kind == FileKind::Basis) {
        ComplexMatrix p(h.rows, h.cols);
        for (std::size_t i = 0; i < h.rows; ++i)
            for (std::size_t j = 0; j < h.cols; ++j)
                p(i, j) = detail::parse_complex(detail::entry_at(h, i, j, ctx, ectx), ectx);
        out.basis = std::move(p);
        return out;
    }

    ComplexMatrix minus(h.rows, h.cols), plus(h.rows, h.cols);
    for (std::size_t i = 0; i < h.rows; ++i)
        for (std::size_t j = 0; j < h.cols; ++j) {
            BicomplexScalar s =
                detail::parse_entry(detail::entry_at(h, i, j, ctx, ectx), h.encoding, ectx);
            minus(i, j) = s.minus;
            plus(i, j) = s.plus;
        }
    out.matrix = BicomplexMatrix::compose(std::move(minus), std::move(plus));
    return out;
}

inline FloatDocument from_json_float(const json& doc, const std::string& ctx = "document") {
    detail::Header h = detail::parse_header(doc, ctx);
    if (h.kind == FileKind::Basis)
        throw ParseError("float mode does not load basis files", ctx + ".kind");

    FloatComplexMatrix minus(h.rows, h.cols), plus(h.rows, h.cols);
    std::string ectx;
    for (std::size_t i = 0; i < h.rows; ++i)
        for (std::size_t j = 0; j < h.cols; ++j) {
            auto [m, p] =
                detail::parse_entry_float(detail::entry_at(h, i, j, ctx, ectx), h.encoding, ectx);
            minus(i, j) = m;
            plus(i, j) = p;
        }
    FloatDocument out;
    out.kind = h.kind;
    out.encoding = h.encoding;
    out.metadata = std::move(h.metadata);
    out.matrix = FloatBicomplexMatrix(std::move(minus), std::move(plus));
    return out;
}

inline json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open file", path);
    try {
        return json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(e.what(), path);
    }
}

inline Document load(const std::string& path) { return from_json(read_json_file(path), path); }

inline FloatDocument load_float(const std::string& path) {
    return from_json_float(read_json_file(path), path);
}

inline void save(const std::string& path, const json& doc) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write file: " + path);
    out << doc.dump(2) << "\n";
}

inline void save_matrix(const std::string& path, const BicomplexMatrix& m,
                        Encoding enc = Encoding::Idempotent, json metadata = nullptr) {
    save(path, to_json(m, FileKind::Matrix, enc, std::move(metadata)));
}

} // namespace bcx::io
