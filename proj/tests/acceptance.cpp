// Acceptance gate: one pass/fail line per criterion, exit 0 only if all pass.
// Every tolerance is pinned here, next to the check that uses it.

#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include "sigvis/experiment.hpp"
#include "sigvis/path.hpp"
#include "sigvis/rng.hpp"
#include "sigvis/signature.hpp"
#include "sigvis/tensor.hpp"
#include "sigvis/theorems.hpp"
#include "sigvis/transforms.hpp"

namespace fs = std::filesystem;
using namespace sigvis;

namespace {

struct Outcome {
    bool passed = false;
    std::string detail;
};

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                             start)
            .count();
    }
};

std::string format(const char* fmt, ...) {
    char buffer[512];
    va_list args;
    va_start(args, fmt);
    std::vsnprintf(buffer, sizeof(buffer), fmt, args);
    va_end(args);
    return buffer;
}

double max_abs_diff(const TensorSeries& a, const TensorSeries& b) {
    double worst = 0.0;
    for (std::size_t i = 0; i < a.data().size(); ++i)
        worst = std::max(worst, std::abs(a.data()[i] - b.data()[i]));
    return worst;
}

PiecewiseLinearPath matched_follower(Rng& rng, const PiecewiseLinearPath& x) {
    const auto y = random_path(rng, x.dim());
    std::vector<double> offset(static_cast<std::size_t>(x.dim()));
    for (int k = 0; k < x.dim(); ++k)
        offset[static_cast<std::size_t>(k)] =
            x.tail_position()[static_cast<std::size_t>(k)] -
            y.initial_position()[static_cast<std::size_t>(k)];
    return translate(y, offset);
}

// 1. Signature of a concatenation equals the tensor product of the parts.
Outcome chen_concatenation() {
    Rng rng(101);
    Timer timer;
    double worst = 0.0;
    for (int trial = 0; trial < 200; ++trial) {
        const int d = rng.uniform_int(1, 3);
        const int p = rng.uniform_int(2, 5);
        const auto x = random_path(rng, d);
        const auto y = matched_follower(rng, x);
        worst = std::max(worst, check_chen_identity(x, y, p).max_abs_error);
    }
    const double secs = timer.seconds();
    return {worst <= 1e-10 && secs < 10.0,
            format("200 matched pairs, max_err=%.2e (tol 1e-10), %.2fs (limit 10s)",
                   worst, secs)};
}

// 2. Running a path and then its reversal leaves only the unit series.
Outcome cancellation_reversal() {
    Rng rng(102);
    double worst = 0.0;
    for (int trial = 0; trial < 200; ++trial) {
        const int d = rng.uniform_int(1, 3);
        const int p = rng.uniform_int(2, 5);
        worst = std::max(
            worst, check_cancellation(random_path(rng, d), p).max_abs_error);
    }
    return {worst <= 1e-10,
            format("200 paths, max_err=%.2e (tol 1e-10)", worst)};
}

// 3. The coefficient on a letter repeated k times is (increment)^k / k!.
Outcome repeated_letter_closed_form() {
    Rng rng(103);
    double worst = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
        const int d = rng.uniform_int(1, 3);
        const auto x = random_path(rng, d);
        const auto s = signature(x, 5);
        for (int letter = 1; letter <= d; ++letter) {
            const auto i = static_cast<std::size_t>(letter - 1);
            const double increment = x.tail_position()[i] - x.initial_position()[i];
            std::vector<int> letters;
            double power = 1.0;
            double factorial = 1.0;
            for (int k = 1; k <= 5; ++k) {
                letters.push_back(letter);
                power *= increment;
                factorial *= k;
                const double expected = power / factorial;
                worst = std::max(
                    worst, std::abs(s.coeff(Word(letters)) - expected));
            }
        }
    }
    return {worst <= 1e-10,
            format("100 paths, k<=5, max_err=%.2e (tol 1e-10)", worst)};
}

// 4. All four closed forms tying flag-touching lifted coefficients to the
// base path: flag-first and flag-last, for both lift variants.
Outcome lift_embedding_identities() {
    Rng rng(104);
    double worst = 0.0;
    for (int trial = 0; trial < 200; ++trial) {
        const int d = rng.uniform_int(1, 3);
        const int p = rng.uniform_int(2, 4);
        worst = std::max(
            worst, check_lift_embedding(random_path(rng, d), p).max_abs_error);
    }
    return {worst <= 1e-10,
            format("200 paths, words up to length depth-1, max_err=%.2e (tol 1e-10)",
                   worst)};
}

// 5. Lifted signature coefficients equal the split-sum over the auxiliary
// leg and the base path, for every word up to depth 4.
Outcome lift_decomposition() {
    Rng rng(105);
    double worst = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
        const int d = rng.uniform_int(1, 3);
        const auto x = random_path(rng, d);
        worst = std::max(
            worst,
            check_lift_decomposition(x, Visibility::Initial, 4).max_abs_error);
        worst = std::max(
            worst,
            check_lift_decomposition(x, Visibility::Tail, 4).max_abs_error);
    }
    return {worst <= 1e-10,
            format("100 paths, both variants, depth 4, max_err=%.2e (tol 1e-10)",
                   worst)};
}

// 6. Level-1 lifted coefficients read off the endpoint positions.
Outcome lift_level_one_positions() {
    Rng rng(106);
    double worst = 0.0;
    for (int trial = 0; trial < 200; ++trial) {
        const int d = rng.uniform_int(1, 3);
        worst = std::max(
            worst, check_level_one_positions(random_path(rng, d)).max_abs_error);
    }
    return {worst <= 1e-12,
            format("200 paths, max_err=%.2e (tol 1e-12)", worst)};
}

// 7. Feature counts: 6 words for (d,p)=(2,2), 39 once both grow by one.
Outcome word_count_growth() {
    const auto plain = word_count(2, 2);
    const auto lifted = word_count(3, 3);
    return {plain == 6 && lifted == 39,
            format("word_count(2,2)=%llu word_count(3,3)=%llu (want 6 and 39)",
                   static_cast<unsigned long long>(plain),
                   static_cast<unsigned long long>(lifted))};
}

// 8. The quadrature oracle agrees with the algebraic signature and its error
// shrinks when the step size halves.
Outcome oracle_agreement_convergence() {
    Rng rng(108);
    PathGenOptions opt;
    opt.max_knots = 6;
    opt.coord_lo = -1.0;
    opt.coord_hi = 1.0;
    double coarse = 0.0;
    double fine = 0.0;
    for (int trial = 0; trial < 20; ++trial) {
        const int d = rng.uniform_int(1, 3);
        const auto x = random_path(rng, d, opt);
        const auto s = signature(x, 3);
        for (int len = 1; len <= 3; ++len) {
            std::size_t words = 1;
            for (int k = 0; k < len; ++k) words *= static_cast<std::size_t>(d);
            for (std::size_t idx = 0; idx < words; ++idx) {
                const Word w = nth_word(d, len, idx);
                const double reference = s.coeff(w);
                coarse = std::max(
                    coarse,
                    std::abs(iterated_integral_oracle(x, w, 10000) - reference));
                fine = std::max(
                    fine,
                    std::abs(iterated_integral_oracle(x, w, 20000) - reference));
            }
        }
    }
    const bool converges = fine < coarse || coarse <= 1e-12;
    return {coarse <= 1e-5 && converges,
            format("20 paths, |w|<=3, max_err m=1e4: %.2e (tol 1e-5), m=2e4: %.2e "
                   "(must shrink)",
                   coarse, fine)};
}

// 9. Plain signatures ignore translation and re-knotting; the discrete
// visibility rows reproduce the continuous construction exactly.
Outcome invariance_suite() {
    Rng rng(109);
    double translation_err = 0.0;
    double refine_err = 0.0;
    double visibility_err = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
        const int d = rng.uniform_int(1, 3);
        const int p = rng.uniform_int(2, 4);
        const auto x = random_path(rng, d);
        const auto s = signature(x, p);

        std::vector<double> offset(static_cast<std::size_t>(d));
        for (auto& c : offset) c = rng.uniform(-2.0, 2.0);
        translation_err = std::max(
            translation_err, max_abs_diff(s, signature(translate(x, offset), p)));

        for (const int m : {2, 3, 7})
            refine_err =
                std::max(refine_err, max_abs_diff(s, signature(refine(x, m), p)));

        Stream stream;
        const int rows = rng.uniform_int(2, 8);
        for (int r = 0; r < rows; ++r) {
            std::vector<double> row(static_cast<std::size_t>(d));
            for (auto& c : row) c = rng.uniform(-2.0, 2.0);
            stream.points.push_back(std::move(row));
        }
        const auto base = path_from_stream(stream);
        for (const Visibility v : {Visibility::Initial, Visibility::Tail}) {
            const Stream rows_route = v == Visibility::Initial
                                          ? visibility_i_discrete(stream)
                                          : visibility_t_discrete(stream);
            const auto discrete = signature(path_from_stream(rows_route), p);
            const auto continuous = signature(visibility_lift_path(base, v), p);
            visibility_err =
                std::max(visibility_err, max_abs_diff(discrete, continuous));
        }
    }
    const bool ok = translation_err <= 1e-12 && refine_err <= 1e-10 &&
                    visibility_err <= 1e-12;
    return {ok,
            format("translation=%.2e (tol 1e-12), refine=%.2e (tol 1e-10), "
                   "visibility=%.2e (tol 1e-12)",
                   translation_err, refine_err, visibility_err)};
}

// 10. The position task: plain features sit in the chance band, lifted
// features solve it.
Outcome position_benchmark() {
    Timer timer;
    const BenchReport report = run_benchmark(42);
    const double secs = timer.seconds();
    const bool ok = report.passed && report.accuracy_plain >= 0.20 &&
                    report.accuracy_plain <= 0.55 && report.accuracy_vis >= 0.95 &&
                    secs < 30.0;
    return {ok,
            format("plain=%.3f (band [0.20,0.55]), lifted=%.3f (>=0.95), %.2fs "
                   "(limit 30s)",
                   report.accuracy_plain, report.accuracy_vis, secs)};
}

int run_command(const std::string& command) {
    const int status = std::system(command.c_str());
    if (!WIFEXITED(status)) return -1;
    return WEXITSTATUS(status);
}

std::string slurp(const fs::path& path) {
    std::ifstream in(path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

std::string mask_elapsed(const std::string& text) {
    static const std::regex field("\"elapsed_ms\":[^,}]*");
    return std::regex_replace(text, field, "\"elapsed_ms\":0");
}

// 11. Re-running the command line tools bit-for-bit reproduces their output.
// The bench report's elapsed_ms field is wall-clock time and is masked
// before comparison; every other byte must match.
Outcome cli_determinism(const std::string& cli) {
    const fs::path dir =
        fs::temp_directory_path() /
        ("sigvis_acceptance_" + std::to_string(::getpid()));
    fs::create_directories(dir);
    const std::string quiet = " 2> " + (dir / "stderr.txt").string();

    std::ofstream input(dir / "in.jsonl");
    input << "{\"id\":\"a\",\"label\":\"0\",\"points\":[[0.3,-1.2],[1.7,0.4],[2.2,2.9]]}\n"
          << "{\"id\":\"b\",\"label\":\"1\",\"points\":[[5.1,0.2],[4.4,-0.8]]}\n";
    input.close();

    const std::string extract = "\"" + cli + "\" extract --input " +
                                (dir / "in.jsonl").string() +
                                " --level 3 --feature sig --transforms "
                                "leadlag,vis_i --output ";
    bool ok = true;
    std::string note;
    if (run_command(extract + (dir / "a.csv").string() + quiet) != 0 ||
        run_command(extract + (dir / "b.csv").string() + quiet) != 0) {
        ok = false;
        note = "extract did not exit cleanly";
    } else if (slurp(dir / "a.csv") != slurp(dir / "b.csv")) {
        ok = false;
        note = "extract outputs differ between runs";
    }

    const std::string bench = "\"" + cli + "\" bench --seed 42 --out ";
    if (ok) {
        if (run_command(bench + (dir / "r1.json").string() + quiet) != 0 ||
            run_command(bench + (dir / "r2.json").string() + quiet) != 0) {
            ok = false;
            note = "bench did not exit cleanly";
        } else if (mask_elapsed(slurp(dir / "r1.json")) !=
                   mask_elapsed(slurp(dir / "r2.json"))) {
            ok = false;
            note = "bench reports differ beyond elapsed_ms";
        } else {
            note = "extract byte-identical; bench byte-identical after masking "
                   "elapsed_ms (wall clock)";
        }
    }

    std::error_code ec;
    fs::remove_all(dir, ec);
    return {ok, note};
}

}  // namespace

int main(int argc, char** argv) {
    std::string cli;
    for (int i = 1; i + 1 < argc; ++i)
        if (std::string(argv[i]) == "--cli") cli = argv[i + 1];
    if (cli.empty()) {
        std::fprintf(stderr, "usage: %s --cli <path to command line binary>\n",
                     argv[0]);
        return 2;
    }

    struct Criterion {
        const char* name;
        Outcome outcome;
    };
    std::vector<Criterion> criteria;
    const auto run = [&criteria](const char* name, auto&& fn) {
        Outcome outcome;
        try {
            outcome = fn();
        } catch (const std::exception& e) {
            outcome = {false, std::string("exception: ") + e.what()};
        }
        criteria.push_back({name, std::move(outcome)});
    };

    run("chen_concatenation", chen_concatenation);
    run("cancellation_reversal", cancellation_reversal);
    run("repeated_letter_closed_form", repeated_letter_closed_form);
    run("lift_embedding_identities", lift_embedding_identities);
    run("lift_decomposition", lift_decomposition);
    run("lift_level_one_positions", lift_level_one_positions);
    run("word_count_growth", word_count_growth);
    run("oracle_agreement_convergence", oracle_agreement_convergence);
    run("invariance_suite", invariance_suite);
    run("position_benchmark", position_benchmark);
    run("cli_determinism", [&cli] { return cli_determinism(cli); });

    bool all_passed = true;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto& c = criteria[i];
        std::printf("[%s] %2zu. %-30s %s\n", c.outcome.passed ? "PASS" : "FAIL",
                    i + 1, c.name, c.outcome.detail.c_str());
        all_passed = all_passed && c.outcome.passed;
    }
    std::printf("%s\n", all_passed ? "acceptance: all criteria passed"
                                   : "acceptance: FAILURES present");
    return all_passed ? 0 : 1;
}
