#include "sigvis/theorems.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include <json.hpp>

#include "sigvis/errors.hpp"
#include "sigvis/signature.hpp"
#include "sigvis/tensor.hpp"

namespace sigvis {

namespace {

double max_abs_diff(const TensorSeries& a, const TensorSeries& b) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.data().size(); ++i)
        m = std::max(m, std::abs(a.data()[i] - b.data()[i]));
    return m;
}

CheckReport make_report(std::string name, double err, std::size_t count,
                        double tol) {
    return {std::move(name), err, count, err <= tol};
}

double factorial(int k) {
    double f = 1.0;
    for (int i = 2; i <= k; ++i) f *= static_cast<double>(i);
    return f;
}

}  // namespace

std::string check_report_json(const CheckReport& report) {
    nlohmann::ordered_json j;
    j["name"] = report.name;
    j["max_abs_error"] = report.max_abs_error;
    j["num_coefficients"] = report.num_coefficients;
    j["passed"] = report.passed;
    return j.dump();
}

CheckReport check_chen_identity(const PiecewiseLinearPath& x,
                                const PiecewiseLinearPath& y, int depth,
                                double tol) {
    const TensorSeries lhs = signature(concat(x, y), depth);
    const TensorSeries rhs = tensor_mul(signature(x, depth), signature(y, depth));
    return make_report("chen_identity", max_abs_diff(lhs, rhs), lhs.size(), tol);
}

CheckReport check_cancellation(const PiecewiseLinearPath& x, int depth,
                               double tol) {
    const TensorSeries s = signature(concat(x, reverse(x)), depth);
    const TensorSeries unit = TensorSeries::unit(x.dim(), depth);
    return make_report("cancellation", max_abs_diff(s, unit), s.size(), tol);
}

CheckReport check_lift_decomposition(const PiecewiseLinearPath& x, Visibility v,
                                     int depth, double tol) {
    const int d = x.dim();
    const int flag = d + 1;
    const TensorSeries lifted = signature(visibility_lift_path(x, v), depth);
    const TensorSeries base = signature(x, depth);
    const TensorSeries side =
        v == Visibility::Initial
            ? signature(visibility_prefix_path(x.initial_position()), depth)
            : signature(visibility_suffix_path(x.tail_position()), depth);

    double err = 0.0;
    std::size_t count = 0;
    for (int k = 0; k <= depth; ++k) {
        const std::size_t level_words = lifted.level_size(k);
        for (std::size_t idx = 0; idx < level_words; ++idx) {
            const Word w = nth_word(flag, k, idx);
            double rhs = 0.0;
            for (int s = 0; s <= k; ++s) {
                const Word head = w.prefix(static_cast<std::size_t>(s));
                const Word tail = w.suffix(static_cast<std::size_t>(s));
                if (v == Visibility::Initial) {
                    if (tail.contains(flag)) continue;
                    rhs += side.coeff(head) * base.coeff(tail);
                } else {
                    if (head.contains(flag)) continue;
                    rhs += base.coeff(head) * side.coeff(tail);
                }
            }
            err = std::max(err, std::abs(lifted.coeff(w) - rhs));
            ++count;
        }
    }
    const char* name = v == Visibility::Initial ? "lift_decomposition_initial"
                                                : "lift_decomposition_tail";
    return make_report(name, err, count, tol);
}

CheckReport check_lift_embedding(const PiecewiseLinearPath& x, int depth,
                                 double tol) {
    if (depth < 2)
        throw ShapeError("check_lift_embedding: depth must be at least 2");
    const int d = x.dim();
    const int flag = d + 1;
    const TensorSeries si = signature(visibility_lift_path(x, Visibility::Initial), depth);
    const TensorSeries st = signature(visibility_lift_path(x, Visibility::Tail), depth);
    const TensorSeries sx = signature(x, depth - 1);
    const auto x0 = x.initial_position();
    const auto x1 = x.tail_position();
    const Word flag_word({flag});

    double err = 0.0;
    std::size_t count = 0;
    for (int k = 0; k <= depth - 1; ++k) {
        const std::size_t level_words = sx.level_size(k);
        for (std::size_t idx = 0; idx < level_words; ++idx) {
            const Word j = nth_word(d, k, idx);
            const Word prefixed = flag_word.concat(j);
            const Word suffixed = j.concat(flag_word);
            double prod0 = 1.0;
            double prod1 = 1.0;
            for (int letter : j) {
                prod0 *= x0[letter - 1];
                prod1 *= x1[letter - 1];
            }
            const double inv_fact = 1.0 / factorial(k);
            const double tail_sign = (k % 2 == 0) ? -1.0 : 1.0;  // (-1)^(k+1)
            const double base_coeff = sx.coeff(j);
            err = std::max(err, std::abs(si.coeff(prefixed) - base_coeff));
            err = std::max(err, std::abs(si.coeff(suffixed) - prod0 * inv_fact));
            err = std::max(err, std::abs(st.coeff(suffixed) + base_coeff));
            err = std::max(err,
                           std::abs(st.coeff(prefixed) - tail_sign * prod1 * inv_fact));
            count += 4;
        }
    }
    return make_report("lift_embedding", err, count, tol);
}

CheckReport check_level_one_positions(const PiecewiseLinearPath& x, double tol) {
    const int d = x.dim();
    const TensorSeries si = signature(visibility_lift_path(x, Visibility::Initial), 1);
    const TensorSeries st = signature(visibility_lift_path(x, Visibility::Tail), 1);
    const auto x0 = x.initial_position();
    const auto x1 = x.tail_position();
    double err = 0.0;
    for (int j = 1; j <= d; ++j) {
        err = std::max(err, std::abs(si.coeff(Word({j})) - x1[j - 1]));
        err = std::max(err, std::abs(st.coeff(Word({j})) + x0[j - 1]));
    }
    return make_report("level_one_positions", err,
                       2 * static_cast<std::size_t>(d), tol);
}

CheckReport check_tree_preservation(const PiecewiseLinearPath& x, int depth,
                                    double tol) {
    const PiecewiseLinearPath y = refine(x, 3);
    double err = 0.0;
    std::size_t count = 0;
    for (Visibility v : {Visibility::Initial, Visibility::Tail}) {
        const TensorSeries sx = signature(visibility_lift_path(x, v), depth);
        const TensorSeries sy = signature(visibility_lift_path(y, v), depth);
        err = std::max(err, max_abs_diff(sx, sy));
        count += sx.size();
    }
    return make_report("tree_preservation", err, count, tol);
}

PiecewiseLinearPath random_path(Rng& rng, int dim, const PathGenOptions& opt) {
    const int n = rng.uniform_int(opt.min_knots, opt.max_knots);
    std::vector<double> times(static_cast<std::size_t>(n));
    std::vector<double> positions(static_cast<std::size_t>(n) *
                                  static_cast<std::size_t>(dim));
    for (int i = 0; i < n; ++i) {
        times[static_cast<std::size_t>(i)] = static_cast<double>(i + 1);
        for (int j = 0; j < dim; ++j)
            positions[static_cast<std::size_t>(i) * static_cast<std::size_t>(dim) +
                      static_cast<std::size_t>(j)] =
                rng.uniform(opt.coord_lo, opt.coord_hi);
    }
    return PiecewiseLinearPath(std::move(times), std::move(positions), dim);
}

std::vector<CheckReport> run_verification_suite(const SuiteOptions& opt) {
    Rng rng(opt.seed);
    std::vector<CheckReport> totals = {
        {"chen_identity", 0.0, 0, true},
        {"cancellation", 0.0, 0, true},
        {"lift_decomposition_initial", 0.0, 0, true},
        {"lift_decomposition_tail", 0.0, 0, true},
        {"lift_embedding", 0.0, 0, true},
        {"level_one_positions", 0.0, 0, true},
        {"tree_preservation", 0.0, 0, true},
    };
    auto fold = [&totals](std::size_t slot, const CheckReport& r) {
        totals[slot].max_abs_error = std::max(totals[slot].max_abs_error, r.max_abs_error);
        totals[slot].num_coefficients += r.num_coefficients;
        totals[slot].passed = totals[slot].passed && r.passed;
    };

    for (int d = 1; d <= 3; ++d) {
        for (int p = 2; p <= 5; ++p) {
            for (int t = 0; t < opt.trials; ++t) {
                const PiecewiseLinearPath x = random_path(rng, d);
                const PiecewiseLinearPath y0 = random_path(rng, d);
                std::vector<double> offset(static_cast<std::size_t>(d));
                for (int j = 0; j < d; ++j)
                    offset[static_cast<std::size_t>(j)] =
                        x.tail_position()[j] - y0.initial_position()[j];
                const PiecewiseLinearPath y = translate(y0, offset);

                fold(0, check_chen_identity(x, y, p));
                fold(1, check_cancellation(x, p));
                fold(2, check_lift_decomposition(x, Visibility::Initial, p));
                fold(3, check_lift_decomposition(x, Visibility::Tail, p));
                fold(4, check_lift_embedding(x, p));
                fold(5, check_level_one_positions(x));
                fold(6, check_tree_preservation(x, p));
            }
        }
    }
    return totals;
}

}  // namespace sigvis
