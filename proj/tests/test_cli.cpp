// End-to-end checks of the bcx binary: exit codes, report fields, encoding
// equivalence, determinism of generate/verify output, and fault injection.
#include "bicomplex/io.hpp"

#include <catch2/catch.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

namespace {

namespace fs = std::filesystem;

struct CliResult {
    int exit_code;
    std::string output;
};

fs::path work_dir() {
    fs::path dir = fs::temp_directory_path() / "bcx_cli_tests";
    fs::create_directories(dir);
    return dir;
}

CliResult run_cli(const std::string& args, const std::string& env_prefix = "") {
    static int counter = 0;
    fs::path out = work_dir() / ("out_" + std::to_string(counter++) + ".txt");
    std::string cmd = env_prefix + std::string(BCX_CLI_PATH) + " " + args + " > " +
                      out.string() + " 2>&1";
    int status = std::system(cmd.c_str());
    std::ifstream in(out);
    std::ostringstream text;
    text << in.rdbuf();
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, text.str()};
}

std::string data_file() { return std::string(BCX_DATA_DIR) + "/singular_not_nilpotent.json"; }

} // namespace

TEST_CASE("analyze the shipped witness file") {
    auto res = run_cli("analyze " + data_file());
    CHECK(res.exit_code == 0);
    CHECK(res.output.find("idempotent:   no") != std::string::npos);
    CHECK(res.output.find("not nilpotent") != std::string::npos);
    CHECK(res.output.find("singular (minus component singular, plus component singular)") !=
          std::string::npos);

    auto structured = run_cli("analyze --format structured " + data_file());
    CHECK(structured.exit_code == 0);
    auto doc = bcx::io::json::parse(structured.output);
    CHECK(doc.at("idempotent") == false);
    CHECK(doc.at("nilpotency").at("is_nilpotent") == false);
    CHECK(doc.at("singularity").at("is_singular") == true);
}

TEST_CASE("cartesian and idempotent encodings produce identical reports") {
    auto doc = bcx::io::load(data_file());
    fs::path cart = work_dir() / "witness_cartesian.json";
    bcx::io::save_matrix(cart.string(), *doc.matrix, bcx::io::Encoding::Cartesian);

    auto a = run_cli("analyze --format structured " + data_file());
    auto b = run_cli("analyze --format structured " + cart.string());
    REQUIRE(a.exit_code == 0);
    REQUIRE(b.exit_code == 0);
    auto ja = bcx::io::json::parse(a.output);
    auto jb = bcx::io::json::parse(b.output);
    ja.erase("encoding");
    jb.erase("encoding");
    CHECK(ja == jb);
}

TEST_CASE("generate then analyze round trip") {
    fs::path dir = work_dir() / "gen";
    fs::create_directories(dir);
    auto gen = run_cli("generate --kind nilpotent --n 4 --k 4 --seed 7 --out " + dir.string());
    REQUIRE(gen.exit_code == 0);

    fs::path file = dir / "nilpotent_n4_k4_seed7_0.json";
    REQUIRE(fs::exists(file));
    auto analyzed = run_cli("analyze --format structured " + file.string());
    REQUIRE(analyzed.exit_code == 0);
    auto doc = bcx::io::json::parse(analyzed.output);
    CHECK(doc.at("nilpotency").at("index") == 4);

    SECTION("same seed regenerates byte-identical files") {
        fs::path dir2 = work_dir() / "gen2";
        fs::create_directories(dir2);
        auto gen2 = run_cli("generate --kind nilpotent --n 4 --k 4 --seed 7 --out " + dir2.string());
        REQUIRE(gen2.exit_code == 0);
        std::ifstream f1(file), f2(dir2 / "nilpotent_n4_k4_seed7_0.json");
        std::ostringstream s1, s2;
        s1 << f1.rdbuf();
        s2 << f2.rdbuf();
        CHECK(s1.str() == s2.str());
        CHECK_FALSE(s1.str().empty());
    }

    SECTION("count produces distinct reproducible instances") {
        auto multi = run_cli("generate --kind idempotent --n 3 --r 0 --seed 5 --count 3 --out " +
                             dir.string());
        REQUIRE(multi.exit_code == 0);
        auto zero = bcx::io::load((dir / "idempotent_n3_r0_seed5_1.json").string());
        CHECK(zero.matrix->is_zero());
    }
}

TEST_CASE("verify exit codes and byte-stable output") {
    auto ok = run_cli("verify --suite idempotent --instances 5 --seed 3 --format structured "
                      "--counterexample-dir " + work_dir().string());
    CHECK(ok.exit_code == 0);
    auto doc = bcx::io::json::parse(ok.output);
    CHECK(doc.at("passed") == true);

    SECTION("output is byte-stable under a fixed seed") {
        auto again = run_cli("verify --suite idempotent --instances 5 --seed 3 --format structured "
                             "--counterexample-dir " + work_dir().string());
        CHECK(again.output == ok.output);
    }
}

TEST_CASE("fault injection: corrupted instance is detected on replay") {
    fs::path dir = work_dir() / "fault";
    fs::create_directories(dir);
    auto gen = run_cli("generate --kind nilpotent --n 3 --k 3 --seed 11 --out " + dir.string());
    REQUIRE(gen.exit_code == 0);
    fs::path file = dir / "nilpotent_n3_k3_seed11_0.json";

    auto clean = run_cli("verify --replay " + file.string());
    CHECK(clean.exit_code == 0);

    // Corrupt one entry so the certified index no longer holds.
    auto doc = bcx::io::read_json_file(file.string());
    doc["entries"][0][0]["minus"]["re"] = "1";
    bcx::io::save(file.string(), doc);

    auto corrupted = run_cli("verify --replay " + file.string());
    CHECK(corrupted.exit_code == 1);
    CHECK(corrupted.output.find("[FAIL]") != std::string::npos);
    CHECK(corrupted.output.find("A^k = 0") != std::string::npos);
}

TEST_CASE("parse and contract exit codes") {
    SECTION("malformed JSON exits 2") {
        fs::path bad = work_dir() / "bad.json";
        std::ofstream(bad) << "{ not json";
        CHECK(run_cli("analyze " + bad.string()).exit_code == 2);
    }
    SECTION("missing file exits 2") {
        CHECK(run_cli("analyze /tmp/bcx_no_such_file.json").exit_code == 2);
    }
    SECTION("bad command line exits 2") {
        CHECK(run_cli("verify --suite bogus").exit_code == 2);
        CHECK(run_cli("frobnicate").exit_code == 2);
    }
    SECTION("bad generator spec exits 3") {
        CHECK(run_cli("generate --kind nilpotent --n 3 --k 9").exit_code == 3);
        CHECK(run_cli("generate --kind nilpotent --n 3").exit_code == 3);
    }
    SECTION("basis files are a contract violation for analyze") {
        fs::path basis = work_dir() / "basis.json";
        bcx::io::save(basis.string(), bcx::io::basis_to_json(bcx::ComplexMatrix::identity(2)));
        CHECK(run_cli("analyze " + basis.string()).exit_code == 3);
    }
    SECTION("predicates explicitly requested on rectangular input exit 3") {
        fs::path rect = work_dir() / "rect.json";
        bcx::io::save_matrix(rect.string(), bcx::BicomplexMatrix::zero(2, 3));
        CHECK(run_cli("analyze " + rect.string()).exit_code == 0);
        CHECK(run_cli("analyze --check nilpotent " + rect.string()).exit_code == 3);
    }
    SECTION("replay without metadata exits 3") {
        fs::path plain = work_dir() / "plain.json";
        bcx::io::save_matrix(plain.string(), bcx::BicomplexMatrix::identity(2));
        CHECK(run_cli("verify --replay " + plain.string()).exit_code == 3);
    }
}

TEST_CASE("operator files analyze with their own kind") {
    auto doc = bcx::io::load(data_file());
    fs::path op = work_dir() / "witness_operator.json";
    bcx::io::save(op.string(),
                  bcx::io::to_json(*doc.matrix, bcx::io::FileKind::Operator,
                                   bcx::io::Encoding::Idempotent));
    auto res = run_cli("analyze --format structured " + op.string());
    REQUIRE(res.exit_code == 0);
    auto parsed = bcx::io::json::parse(res.output);
    CHECK(parsed.at("kind") == "operator");
    CHECK(parsed.at("nilpotency").at("is_nilpotent") == false);
}

TEST_CASE("environment variable selects the default mode") {
    auto res = run_cli("analyze " + data_file(), "BCX_MODE=float ");
    CHECK(res.exit_code == 0);
    CHECK(res.output.find("mode:         float") != std::string::npos);
    CHECK(res.output.find("tolerance:    1.0000000000000001e-09") != std::string::npos);
}

TEST_CASE("float and exact mode agree on the witness file") {
    auto exact = run_cli("analyze --format structured --mode exact " + data_file());
    auto approx = run_cli("analyze --format structured --mode float --tol 1e-9 " + data_file());
    auto je = bcx::io::json::parse(exact.output);
    auto jf = bcx::io::json::parse(approx.output);
    CHECK(je.at("idempotent") == jf.at("idempotent"));
    CHECK(je.at("nilpotency").at("is_nilpotent") == jf.at("nilpotency").at("is_nilpotent"));
    CHECK(je.at("singularity").at("is_singular") == jf.at("singularity").at("is_singular"));
}
