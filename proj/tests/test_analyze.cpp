#include "bicomplex/analyze.hpp"

#include "bicomplex/generators.hpp"
#include "oracles.hpp"

#include <catch2/catch.hpp>

using namespace bcx;
using oracle::TestRng;

namespace {

BicomplexMatrix witness() {
    return {ComplexMatrix{{0, 1, 1}, {0, 0, 1}, {0, 0, 0}}, ComplexMatrix::diagonal({1, 0, 1})};
}

} // namespace

TEST_CASE("exact analysis of the witness instance") {
    AnalysisReport r = analyze(witness(), io::FileKind::Matrix, io::Encoding::Idempotent);
    CHECK(r.kind == "matrix");
    CHECK(r.rows == 3);
    CHECK(r.cols == 3);
    CHECK(r.mode == Mode::Exact);
    CHECK(r.square);
    CHECK(r.entries_zero == 4);
    CHECK(r.entries_invertible == 0);
    CHECK(r.entries_zero_divisor == 5);
    REQUIRE(r.idempotent.has_value());
    CHECK_FALSE(*r.idempotent);
    REQUIRE(r.nilpotent.has_value());
    CHECK_FALSE(r.nilpotent->is_nilpotent);
    CHECK(*r.singular);
    CHECK(*r.minus_singular);
    CHECK(*r.plus_singular);
    CHECK(r.det_minus == "0+0i");
    CHECK(r.det_plus == "0+0i");
}

TEST_CASE("identity matrix report") {
    AnalysisReport r =
        analyze(BicomplexMatrix::identity(3), io::FileKind::Matrix, io::Encoding::Idempotent);
    CHECK(*r.idempotent);
    CHECK_FALSE(r.nilpotent->is_nilpotent);
    CHECK_FALSE(*r.singular);
    CHECK(r.det_minus == "1+0i");
    CHECK(r.entries_invertible == 3);
    CHECK(r.entries_zero == 6);
}

TEST_CASE("rectangular input marks square-only predicates not applicable") {
    TestRng rng(311);
    AnalysisReport r =
        analyze(rng.bicomplex_matrix(2, 4, 9), io::FileKind::Matrix, io::Encoding::Cartesian);
    CHECK_FALSE(r.square);
    CHECK_FALSE(r.idempotent.has_value());
    CHECK_FALSE(r.nilpotent.has_value());
    CHECK_FALSE(r.singular.has_value());

    io::json doc = to_json(r);
    CHECK(doc.at("idempotent").is_null());
    CHECK(doc.at("nilpotency").is_null());
    CHECK(doc.at("singularity").is_null());

    std::string text = to_text(r);
    CHECK(text.find("not applicable") != std::string::npos);
}

TEST_CASE("nilpotent reports are internally consistent") {
    auto a = BicomplexMatrix::compose(gen_nilpotent(GenSpec::nilpotent(11, 4, 3)),
                                      gen_nilpotent(GenSpec::nilpotent(12, 4, 2)));
    AnalysisReport r = analyze(a, io::FileKind::Matrix, io::Encoding::Idempotent);
    REQUIRE(r.nilpotent.has_value());
    REQUIRE(r.nilpotent->is_nilpotent);
    CHECK(r.nilpotent->index == 3);
    // Nilpotent forces both component determinants to vanish.
    CHECK(*r.minus_singular);
    CHECK(*r.plus_singular);
}

TEST_CASE("float analysis agrees with exact on the witness") {
    AnalysisReport exact = analyze(witness(), io::FileKind::Matrix, io::Encoding::Idempotent);
    AnalysisReport approx =
        analyze(to_float(witness()), io::FileKind::Matrix, io::Encoding::Idempotent, 1e-9);
    CHECK(approx.mode == Mode::Float);
    CHECK(approx.tolerance == 1e-9);
    CHECK(*approx.idempotent == *exact.idempotent);
    CHECK(approx.nilpotent->is_nilpotent == exact.nilpotent->is_nilpotent);
    CHECK(*approx.singular == *exact.singular);
    CHECK(approx.entries_zero == exact.entries_zero);
    CHECK(approx.entries_zero_divisor == exact.entries_zero_divisor);
}

TEST_CASE("text output contains every structured field") {
    AnalysisReport r = analyze(witness(), io::FileKind::Matrix, io::Encoding::Idempotent);
    std::string text = to_text(r);
    io::json doc = to_json(r);
    for (const char* label :
         {"kind:", "shape:", "encoding:", "mode:", "tolerance:", "square:", "entries:",
          "idempotent:", "nilpotency:", "singularity:", "det(minus):", "det(plus):"})
        CHECK(text.find(label) != std::string::npos);
    for (const char* key : {"kind", "shape", "encoding", "mode", "tolerance", "square",
                            "entry_classes", "idempotent", "nilpotency", "singularity"})
        CHECK(doc.contains(key));
}
