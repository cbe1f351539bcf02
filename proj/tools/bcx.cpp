// bcx: analyze bicomplex matrix files, generate certified instances, and run
// the theorem-verification suites.
//
// Exit codes: 0 success, 1 counterexample found (verify/replay), 2 input
// could not be parsed (file or command line), 3 contract violation (bad
// generator spec, predicate explicitly requested on rectangular input, wrong
// file kind).

#include "bicomplex/analyze.hpp"
#include "bicomplex/generators.hpp"
#include "bicomplex/io.hpp"
#include "bicomplex/verify.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

namespace {

using bcx::io::json;

struct AnalyzeArgs {
    std::string path;
    std::string mode = "exact";
    double tol = 1e-9;
    std::string format = "text";
    std::vector<std::string> require_checks;
};

int run_analyze(const AnalyzeArgs& args) {
    json raw = bcx::io::read_json_file(args.path);
    if (raw.is_object() && raw.contains("kind") && raw.at("kind") == "basis")
        throw bcx::BadSpec("analyze expects a matrix or operator file, got a basis");

    bcx::AnalysisReport report;
    if (args.mode == "float") {
        bcx::io::FloatDocument doc = bcx::io::from_json_float(raw, args.path);
        report = bcx::analyze(*doc.matrix, doc.kind, doc.encoding, args.tol);
    } else {
        bcx::io::Document doc = bcx::io::from_json(raw, args.path);
        report = bcx::analyze(*doc.matrix, doc.kind, doc.encoding);
    }

    for (const std::string& check : args.require_checks) {
        if (!report.square)
            throw bcx::BadSpec("--check " + check + " is not applicable to a rectangular matrix");
    }

    if (args.format == "structured")
        std::cout << bcx::to_json(report).dump(2) << "\n";
    else
        std::cout << bcx::to_text(report);
    return 0;
}

struct GenerateArgs {
    std::string kind;
    std::size_t n = 0;
    std::size_t k = 0;
    bool k_given = false;
    std::size_t r = 0;
    bool r_given = false;
    std::uint64_t seed = 0;
    std::size_t count = 1;
    std::size_t entry_bound = 10;
    std::string out = ".";
    std::string encoding = "idempotent";
    std::string format = "text";
};

int run_generate(const GenerateArgs& args) {
    bcx::io::Encoding enc = args.encoding == "cartesian" ? bcx::io::Encoding::Cartesian
                                                         : bcx::io::Encoding::Idempotent;
    std::filesystem::create_directories(args.out);
    json files = json::array();
    for (std::size_t i = 0; i < args.count; ++i) {
        std::uint64_t seed_minus = bcx::verify_detail::derive_seed(args.seed, 0xA0, 2 * i);
        std::uint64_t seed_plus = bcx::verify_detail::derive_seed(args.seed, 0xA0, 2 * i + 1);

        json certificate;
        std::string stem;
        auto make = [&](std::uint64_t component_seed) {
            if (args.kind == "nilpotent") {
                if (!args.k_given) throw bcx::BadSpec("--kind nilpotent requires --k");
                certificate = {{"index", args.k}};
                stem = "nilpotent_n" + std::to_string(args.n) + "_k" + std::to_string(args.k);
                return bcx::gen_nilpotent(bcx::GenSpec::nilpotent(component_seed, args.n, args.k,
                                                                  args.entry_bound));
            }
            if (args.kind == "idempotent") {
                if (!args.r_given) throw bcx::BadSpec("--kind idempotent requires --r");
                certificate = {{"rank", args.r}};
                stem = "idempotent_n" + std::to_string(args.n) + "_r" + std::to_string(args.r);
                return bcx::gen_idempotent(bcx::GenSpec::idempotent(component_seed, args.n, args.r,
                                                                    args.entry_bound));
            }
            if (args.kind == "invertible") {
                certificate = {{"unimodular", true}};
                stem = "invertible_n" + std::to_string(args.n);
                return bcx::gen_invertible(bcx::GenSpec::invertible(component_seed, args.n,
                                                                    args.entry_bound));
            }
            if (args.kind == "arbitrary") {
                certificate = json::object();
                stem = "arbitrary_n" + std::to_string(args.n);
                return bcx::gen_arbitrary(bcx::GenSpec::arbitrary(component_seed, args.n,
                                                                  args.entry_bound));
            }
            throw bcx::BadSpec("unknown kind: " + args.kind);
        };

        bcx::ComplexMatrix minus = make(seed_minus);
        bcx::ComplexMatrix plus = make(seed_plus);
        bcx::BicomplexMatrix instance(std::move(minus), std::move(plus));

        json metadata = {{"seed", args.seed},
                         {"instance", i},
                         {"kind", args.kind},
                         {"certificate", certificate},
                         {"generator", std::string(bcx::kGeneratorAlgorithm)},
                         {"entry_bound", args.entry_bound}};
        std::string path = args.out + "/" + stem + "_seed" + std::to_string(args.seed) + "_" +
                           std::to_string(i) + ".json";
        bcx::io::save(path, bcx::io::to_json(instance, bcx::io::FileKind::Matrix, enc, metadata));
        files.push_back({{"path", path}, {"kind", args.kind}, {"certificate", certificate}});
    }

    if (args.format == "structured") {
        std::cout << json{{"files", files}}.dump(2) << "\n";
    } else {
        for (const auto& f : files)
            std::cout << "wrote " << f.at("path").get<std::string>() << " (kind=" << args.kind
                      << ", certificate " << f.at("certificate").dump() << ")\n";
    }
    return 0;
}

struct VerifyArgs {
    std::string suite = "all";
    std::size_t instances = 100;
    std::uint64_t seed = 1;
    std::string format = "text";
    std::string counterexample_dir = ".";
    std::string replay;
};

void print_check_text(const bcx::CheckResult& res) {
    std::cout << (res.passed ? "[PASS] " : "[FAIL] ") << res.suite << ": " << res.name << " ("
              << res.instances << (res.instances == 1 ? " instance)" : " instances)");
    if (!res.passed) {
        std::cout << " -- " << res.detail;
        if (!res.counterexample_path.empty())
            std::cout << "; counterexample: " << res.counterexample_path;
    }
    std::cout << "\n";
}

json check_to_json(const bcx::CheckResult& res) {
    return {{"suite", res.suite},
            {"check", res.name},
            {"instances", res.instances},
            {"passed", res.passed},
            {"detail", res.detail.empty() ? json(nullptr) : json(res.detail)},
            {"counterexample", res.counterexample_path.empty() ? json(nullptr)
                                                               : json(res.counterexample_path)}};
}

int run_verify(const VerifyArgs& args) {
    if (!args.replay.empty()) {
        bcx::CheckResult res = bcx::replay_instance(args.replay);
        if (args.format == "structured")
            std::cout << json{{"replay", args.replay}, {"result", check_to_json(res)}}.dump(2)
                      << "\n";
        else
            print_check_text(res);
        return res.passed ? 0 : 1;
    }

    bcx::VerifyOptions opt;
    opt.seed = args.seed;
    opt.instances = args.instances;
    opt.counterexample_dir = args.counterexample_dir;
    std::vector<bcx::CheckResult> results = bcx::verify_suites(args.suite, opt);

    std::size_t passed = 0;
    for (const auto& res : results) passed += res.passed ? 1 : 0;
    bool ok = passed == results.size();

    if (args.format == "structured") {
        json checks = json::array();
        for (const auto& res : results) checks.push_back(check_to_json(res));
        std::cout << json{{"suite", args.suite},
                          {"seed", args.seed},
                          {"instances", args.instances},
                          {"checks", checks},
                          {"passed", ok}}
                         .dump(2)
                  << "\n";
    } else {
        for (const auto& res : results) print_check_text(res);
        std::cout << results.size() << " checks, " << passed << " passed, "
                  << results.size() - passed << " failed\n";
    }
    return ok ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact bicomplex linear algebra toolkit"};
    app.require_subcommand(1);

    AnalyzeArgs analyze_args;
    CLI::App* analyze = app.add_subcommand("analyze", "analyze a matrix or operator file");
    analyze->add_option("file", analyze_args.path, "matrix file to analyze")->required();
    analyze->add_option("--mode", analyze_args.mode, "arithmetic mode")
        ->check(CLI::IsMember({"exact", "float"}))
        ->envname("BCX_MODE");
    analyze->add_option("--tol", analyze_args.tol, "tolerance for float mode (default 1e-9)");
    analyze->add_option("--format", analyze_args.format, "output format")
        ->check(CLI::IsMember({"text", "structured"}));
    analyze
        ->add_option("--check", analyze_args.require_checks,
                     "require a predicate to be applicable (exit 3 otherwise)")
        ->check(CLI::IsMember({"idempotent", "nilpotent", "singular"}));

    GenerateArgs gen_args;
    CLI::App* generate = app.add_subcommand("generate", "emit certified instances");
    generate->add_option("--kind", gen_args.kind, "instance kind")
        ->required()
        ->check(CLI::IsMember({"nilpotent", "idempotent", "invertible", "arbitrary"}));
    generate->add_option("--n", gen_args.n, "matrix size")->required();
    generate->add_option("--k", gen_args.k, "nilpotency index (nilpotent kind)");
    generate->add_option("--r", gen_args.r, "rank (idempotent kind)");
    generate->add_option("--seed", gen_args.seed, "root seed (default 0)");
    generate->add_option("--count", gen_args.count, "number of instances (default 1)");
    generate->add_option("--entry-bound", gen_args.entry_bound,
                         "bound on sampled numerators/denominators (default 10)");
    generate->add_option("--out", gen_args.out, "output directory (default .)");
    generate->add_option("--encoding", gen_args.encoding, "file encoding")
        ->check(CLI::IsMember({"idempotent", "cartesian"}));
    generate->add_option("--format", gen_args.format, "output format")
        ->check(CLI::IsMember({"text", "structured"}));

    VerifyArgs verify_args;
    CLI::App* verify = app.add_subcommand("verify", "run the theorem-verification suites");
    verify->add_option("--suite", verify_args.suite, "which suite to run")
        ->check(CLI::IsMember({"all", "scalar", "nilpotent", "idempotent"}));
    verify->add_option("--instances", verify_args.instances,
                       "instances per property (default 100)");
    verify->add_option("--seed", verify_args.seed, "root seed (default 1)");
    verify->add_option("--format", verify_args.format, "output format")
        ->check(CLI::IsMember({"text", "structured"}));
    verify->add_option("--counterexample-dir", verify_args.counterexample_dir,
                       "where to write counterexample files (default .)");
    verify->add_option("--replay", verify_args.replay,
                       "re-check one generated instance or counterexample file");

    int exit_code = 0;
    analyze->callback([&] { exit_code = run_analyze(analyze_args); });
    generate->callback([&] {
        if (gen_args.k > 0 || generate->count("--k") > 0) gen_args.k_given = true;
        if (generate->count("--r") > 0) gen_args.r_given = true;
        exit_code = run_generate(gen_args);
    });
    verify->callback([&] { exit_code = run_verify(verify_args); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2; // help/version exit 0; bad arguments exit 2
    } catch (const bcx::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const bcx::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return exit_code;
}
