#include <doctest.h>

#include <cmath>
#include <vector>

#include "sigvis/errors.hpp"
#include "sigvis/path.hpp"
#include "sigvis/signature.hpp"
#include "sigvis/tensor.hpp"
#include "sigvis/theorems.hpp"

using namespace sigvis;

namespace {

double max_abs_diff(const TensorSeries& a, const TensorSeries& b) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.data().size(); ++i)
        m = std::max(m, std::abs(a.data()[i] - b.data()[i]));
    return m;
}

PathGenOptions unit_scale() {
    PathGenOptions opt;
    opt.coord_lo = -1.0;
    opt.coord_hi = 1.0;
    return opt;
}

const Stream kLShape{{{0.0, 0.0}, {1.0, 0.0}, {1.0, 1.0}}};

}  // namespace

TEST_SUITE("signature") {

TEST_CASE("segment exponential") {
    const std::vector<double> two = {2.0};
    const TensorSeries s = segment_signature(two, 3);
    CHECK(s.constant() == 1.0);
    CHECK(s.coeff(Word({1})) == doctest::Approx(2.0));
    CHECK(s.coeff(Word({1, 1})) == doctest::Approx(2.0));
    CHECK(s.coeff(Word({1, 1, 1})) == doctest::Approx(4.0 / 3.0));

    const std::vector<double> zero = {0.0, 0.0};
    CHECK(max_abs_diff(segment_signature(zero, 3), TensorSeries::unit(2, 3)) == 0.0);

    const std::vector<double> ones = {1.0, 1.0};
    const TensorSeries diag = segment_signature(ones, 2);
    for (double v : diag.level(2)) CHECK(v == doctest::Approx(0.5));

    // agrees with the generic exponential route
    TensorSeries level1(2, 4);
    level1.set_coeff(Word({1}), 0.3);
    level1.set_coeff(Word({2}), -1.7);
    const std::vector<double> inc = {0.3, -1.7};
    CHECK(max_abs_diff(segment_signature(inc, 4), tensor_exp(level1)) < 1e-15);
}

TEST_CASE("two-segment path") {
    const TensorSeries s = signature(path_from_stream(kLShape), 2);
    CHECK(s.coeff(Word({1})) == doctest::Approx(1.0));
    CHECK(s.coeff(Word({2})) == doctest::Approx(1.0));
    CHECK(s.coeff(Word({1, 1})) == doctest::Approx(0.5));
    CHECK(s.coeff(Word({1, 2})) == doctest::Approx(1.0));
    CHECK(s.coeff(Word({2, 1})) == doctest::Approx(0.0));
    CHECK(s.coeff(Word({2, 2})) == doctest::Approx(0.5));
}

TEST_CASE("straight line matches the closed form") {
    const TensorSeries s = signature(path_from_stream(Stream{{{0.0}, {2.0}}}), 4);
    CHECK(s.coeff(Word({1})) == doctest::Approx(2.0));
    CHECK(s.coeff(Word({1, 1})) == doctest::Approx(2.0));
    CHECK(s.coeff(Word({1, 1, 1})) == doctest::Approx(4.0 / 3.0));
    CHECK(s.coeff(Word({1, 1, 1, 1})) == doctest::Approx(2.0 / 3.0));
}

TEST_CASE("single knot gives the unit series") {
    const auto p = path_from_stream(Stream{{{7.0, -1.0}}});
    CHECK(max_abs_diff(signature(p, 3), TensorSeries::unit(2, 3)) == 0.0);
    CHECK(max_abs_diff(log_signature(p, 3), TensorSeries(2, 3)) == 0.0);
}

TEST_CASE("concatenation multiplies signatures") {
    Rng rng(101);
    for (int trial = 0; trial < 30; ++trial) {
        const int d = rng.uniform_int(1, 3);
        const int p = rng.uniform_int(2, 5);
        const auto x = random_path(rng, d, unit_scale());
        const auto y0 = random_path(rng, d, unit_scale());
        std::vector<double> offset(static_cast<std::size_t>(d));
        for (int j = 0; j < d; ++j)
            offset[static_cast<std::size_t>(j)] =
                x.tail_position()[j] - y0.initial_position()[j];
        const auto y = translate(y0, offset);
        const double err = max_abs_diff(
            signature(concat(x, y), p),
            tensor_mul(signature(x, p), signature(y, p)));
        CHECK(err < 1e-12);
    }
}

TEST_CASE("concatenation is associative up to reparameterization") {
    Rng rng(55);
    const auto a = random_path(rng, 2, unit_scale());
    auto mk_matched = [&rng](const PiecewiseLinearPath& prev) {
        const auto raw = random_path(rng, 2, unit_scale());
        std::vector<double> offset = {prev.tail_position()[0] - raw.initial_position()[0],
                                      prev.tail_position()[1] - raw.initial_position()[1]};
        return translate(raw, offset);
    };
    const auto b = mk_matched(a);
    const auto c = mk_matched(b);
    CHECK(max_abs_diff(signature(concat(concat(a, b), c), 4),
                       signature(concat(a, concat(b, c)), 4)) < 1e-12);
}

TEST_CASE("retracing a path cancels its signature") {
    Rng rng(7);
    for (int trial = 0; trial < 30; ++trial) {
        const int d = rng.uniform_int(1, 3);
        const auto x = random_path(rng, d);
        const auto loop = concat(x, reverse(x));
        CHECK(max_abs_diff(signature(loop, 4), TensorSeries::unit(d, 4)) < 1e-10);
    }
}

TEST_CASE("signature ignores translation and reparameterization") {
    Rng rng(13);
    for (int trial = 0; trial < 20; ++trial) {
        const int d = rng.uniform_int(1, 3);
        const int p = rng.uniform_int(2, 5);
        const auto x = random_path(rng, d);
        const TensorSeries s = signature(x, p);
        std::vector<double> c(static_cast<std::size_t>(d));
        for (auto& v : c) v = rng.uniform(-2.0, 2.0);
        CHECK(max_abs_diff(s, signature(translate(x, c), p)) < 1e-12);
        for (int m : {2, 3, 7})
            CHECK(max_abs_diff(s, signature(refine(x, m), p)) < 1e-10);
    }
}

TEST_CASE("repeated letters collapse to powers of the increment") {
    Rng rng(29);
    for (int trial = 0; trial < 20; ++trial) {
        const int d = rng.uniform_int(1, 3);
        const auto x = random_path(rng, d);
        const TensorSeries s = signature(x, 5);
        for (int l = 1; l <= d; ++l) {
            const double inc = x.tail_position()[l - 1] - x.initial_position()[l - 1];
            std::vector<int> letters;
            double fact = 1.0, power = 1.0;
            for (int k = 1; k <= 5; ++k) {
                letters.push_back(l);
                fact *= k;
                power *= inc;
                CHECK(std::abs(s.coeff(Word(letters)) - power / fact) < 1e-10);
            }
        }
    }
}

TEST_CASE("log of a straight segment is pure level one") {
    const auto p = path_from_stream(Stream{{{0.5, -2.0}, {1.5, 1.0}}});
    const TensorSeries lg = log_signature(p, 4);
    CHECK(lg.coeff(Word({1})) == doctest::Approx(1.0));
    CHECK(lg.coeff(Word({2})) == doctest::Approx(3.0));
    for (int k = 2; k <= 4; ++k)
        for (double v : lg.level(k)) CHECK(std::abs(v) < 1e-10);
}

TEST_CASE("log of the two-segment path keeps half the area commutator") {
    const TensorSeries lg = log_signature(path_from_stream(kLShape), 2);
    CHECK(lg.coeff(Word({1})) == doctest::Approx(1.0));
    CHECK(lg.coeff(Word({2})) == doctest::Approx(1.0));
    CHECK(lg.coeff(Word({1, 2})) == doctest::Approx(0.5));
    CHECK(lg.coeff(Word({2, 1})) == doctest::Approx(-0.5));
    CHECK(lg.coeff(Word({1, 1})) == doctest::Approx(0.0));
}

TEST_CASE("brute-force recursion reproduces low levels") {
    const auto line = path_from_stream(Stream{{{0.0}, {2.0}}});
    CHECK(iterated_integral_oracle(line, Word({1}), 10) == doctest::Approx(2.0));
    CHECK(std::abs(iterated_integral_oracle(line, Word({1, 1}), 1000) - 2.0) < 1e-6);

    const auto l_path = path_from_stream(kLShape);
    CHECK(std::abs(iterated_integral_oracle(l_path, Word({1, 2}), 1000) - 1.0) < 1e-6);
    CHECK(iterated_integral_oracle(l_path, Word{}, 10) == 1.0);

    CHECK_THROWS_AS(iterated_integral_oracle(line, Word({2}), 10), ShapeError);
    CHECK_THROWS_AS(iterated_integral_oracle(line, Word({1}), 0), ShapeError);
}

TEST_CASE("brute-force recursion converges with at least first order") {
    Rng rng(31);
    for (int trial = 0; trial < 5; ++trial) {
        const int d = rng.uniform_int(1, 3);
        const auto x = random_path(rng, d, unit_scale());
        const TensorSeries s = signature(x, 3);
        double coarse = 0.0, fine = 0.0;
        for (std::size_t idx = 0; idx < word_count(d, 3) - word_count(d, 2); ++idx) {
            const Word w = nth_word(d, 3, idx);
            coarse = std::max(coarse,
                              std::abs(iterated_integral_oracle(x, w, 200) - s.coeff(w)));
            fine = std::max(fine,
                            std::abs(iterated_integral_oracle(x, w, 400) - s.coeff(w)));
        }
        if (coarse > 1e-12) CHECK(fine < coarse / 1.9);
    }
}

}  // TEST_SUITE
