#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "sigvis/errors.hpp"
#include "sigvis/experiment.hpp"
#include "sigvis/pipeline.hpp"
#include "sigvis/theorems.hpp"

namespace {

struct ExtractArgs {
    std::string input;
    std::string output;
    int level = 2;
    std::string transforms;
    std::string feature = "sig";
    bool include_constant = false;
    std::uint64_t seed = 0;
};

int run_extract(const ExtractArgs& args) {
    sigvis::RunConfig config;
    config.depth = args.level;
    config.chain = sigvis::parse_chain(args.transforms);
    config.feature = args.feature == "logsig" ? sigvis::FeatureKind::LogSignature
                                              : sigvis::FeatureKind::Signature;
    config.include_constant = args.include_constant;
    config.seed = args.seed;

    std::vector<sigvis::StreamRecord> records;
    if (args.input == "-") {
        records = sigvis::read_streams(std::cin);
    } else {
        std::ifstream in(args.input);
        if (!in) throw sigvis::ConfigError("cannot open input '" + args.input + "'");
        records = sigvis::read_streams(in);
    }

    const sigvis::FeatureLayout layout =
        records.empty() ? sigvis::FeatureLayout{}
                        : sigvis::layout_for(records[0].stream.dim(), config);
    const std::vector<sigvis::FeatureRecord> features =
        sigvis::extract(records, config);

    if (args.output == "-") {
        sigvis::write_features(features, layout, std::cout);
    } else {
        std::ofstream out(args.output);
        if (!out) throw sigvis::ConfigError("cannot open output '" + args.output + "'");
        sigvis::write_features(features, layout, out);
    }
    return 0;
}

int run_verify(int trials, std::uint64_t seed, bool json) {
    sigvis::SuiteOptions opt;
    opt.trials = trials;
    opt.seed = seed;
    const auto reports = sigvis::run_verification_suite(opt);
    bool all_passed = true;
    for (const auto& r : reports) {
        if (json)
            std::cout << sigvis::check_report_json(r) << '\n';
        else
            std::printf("%-28s max_abs_error=%.3e coefficients=%zu %s\n",
                        r.name.c_str(), r.max_abs_error, r.num_coefficients,
                        r.passed ? "PASS" : "FAIL");
        all_passed = all_passed && r.passed;
    }
    return all_passed ? 0 : 1;
}

int run_bench(std::uint64_t seed, const std::string& out_path) {
    const sigvis::BenchReport report = sigvis::run_benchmark(seed);
    const std::string json = sigvis::bench_report_json(report);
    if (out_path.empty()) {
        std::cout << json << '\n';
    } else {
        std::ofstream out(out_path);
        if (!out) throw sigvis::ConfigError("cannot open output '" + out_path + "'");
        out << json << '\n';
    }
    return report.passed ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Signature features of streamed data with visibility lifts"};
    app.require_subcommand(1);

    ExtractArgs ext_args;
    auto* ext = app.add_subcommand(
        "extract", "Extract signature features from JSONL streams to CSV");
    ext->add_option("--input", ext_args.input, "JSONL input path, or - for stdin")
        ->required();
    ext->add_option("--output", ext_args.output, "CSV output path, or - for stdout")
        ->required();
    ext->add_option("--level", ext_args.level, "Truncation depth")
        ->required()
        ->check(CLI::PositiveNumber);
    ext->add_option("--transforms", ext_args.transforms,
                    "Comma-separated transform chain, e.g. time,leadlag,vis_i");
    ext->add_option("--feature", ext_args.feature, "Feature kind: sig or logsig")
        ->required()
        ->check(CLI::IsMember({"sig", "logsig"}));
    ext->add_flag("--include-constant", ext_args.include_constant,
                  "Emit the constant word column");
    ext->add_option("--seed", ext_args.seed, "Run seed recorded in the config");

    int trials = 200;
    std::uint64_t verify_seed = 42;
    bool json = false;
    auto* ver = app.add_subcommand("verify", "Run the identity verification suite");
    ver->add_option("--trials", trials, "Trials per (dimension, depth) configuration")
        ->check(CLI::PositiveNumber);
    ver->add_option("--seed", verify_seed, "Generator seed");
    ver->add_flag("--json", json, "One JSON object per check");

    std::uint64_t bench_seed = 42;
    std::string bench_out;
    auto* ben = app.add_subcommand(
        "bench", "Run the synthetic position-vs-shape experiment");
    ben->add_option("--seed", bench_seed, "Experiment seed");
    ben->add_option("--out", bench_out, "Write the JSON report here instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (app.got_subcommand(ext)) return run_extract(ext_args);
        if (app.got_subcommand(ver)) return run_verify(trials, verify_seed, json);
        return run_bench(bench_seed, bench_out);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}
