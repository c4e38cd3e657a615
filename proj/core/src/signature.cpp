#include "sigvis/signature.hpp"

#include <cstddef>
#include <utility>
#include <vector>

#include "sigvis/errors.hpp"

namespace sigvis {

TensorSeries segment_signature(std::span<const double> increment, int depth) {
    const int d = static_cast<int>(increment.size());
    if (d < 1) throw ShapeError("segment_signature: empty increment");
    if (depth < 1) throw ShapeError("segment_signature: depth must be positive");
    TensorSeries out(d, depth);
    out.data()[0] = 1.0;
    auto first = out.level(1);
    for (int j = 0; j < d; ++j) first[j] = increment[j];
    for (int k = 2; k <= depth; ++k) {
        auto prev = out.level(k - 1);
        auto cur = out.level(k);
        const double inv = 1.0 / static_cast<double>(k);
        for (std::size_t i = 0; i < prev.size(); ++i) {
            const double base = prev[i] * inv;
            double* row = cur.data() + i * static_cast<std::size_t>(d);
            for (int j = 0; j < d; ++j) row[j] = base * increment[j];
        }
    }
    return out;
}

TensorSeries signature(const PiecewiseLinearPath& x, int depth) {
    if (depth < 1) throw ShapeError("signature: depth must be positive");
    const std::size_t d = static_cast<std::size_t>(x.dim());
    TensorSeries acc = TensorSeries::unit(x.dim(), depth);
    std::vector<double> inc(d);
    for (std::size_t i = 0; i < x.num_segments(); ++i) {
        const auto a = x.position(i);
        const auto b = x.position(i + 1);
        for (std::size_t j = 0; j < d; ++j) inc[j] = b[j] - a[j];
        acc = tensor_mul(acc, segment_signature(inc, depth));
    }
    return acc;
}

TensorSeries log_signature(const PiecewiseLinearPath& x, int depth) {
    return tensor_log(signature(x, depth));
}

double iterated_integral_oracle(const PiecewiseLinearPath& x, const Word& w,
                                int steps) {
    if (steps < 1) throw ShapeError("iterated_integral_oracle: steps must be positive");
    if (w.empty()) return 1.0;
    for (int letter : w)
        if (letter < 1 || letter > x.dim())
            throw ShapeError("iterated_integral_oracle: letter outside alphabet");

    const std::size_t segs = x.num_segments();
    const std::size_t m = static_cast<std::size_t>(steps);
    const std::size_t grid = segs * m + 1;

    std::vector<double> prev(grid, 1.0);
    std::vector<double> cur(grid, 0.0);
    std::vector<double> coord(grid, 0.0);

    for (std::size_t a = 0; a < w.size(); ++a) {
        const std::size_t c = static_cast<std::size_t>(w[static_cast<std::size_t>(a)] - 1);
        coord[0] = x.position(0)[c];
        for (std::size_t i = 0; i < segs; ++i) {
            const double lo = x.position(i)[c];
            const double hi = x.position(i + 1)[c];
            for (std::size_t j = 1; j <= m; ++j)
                coord[i * m + j] =
                    lo + (hi - lo) * (static_cast<double>(j) / static_cast<double>(m));
        }
        cur[0] = 0.0;
        for (std::size_t g = 1; g < grid; ++g)
            cur[g] = cur[g - 1] +
                     0.5 * (prev[g - 1] + prev[g]) * (coord[g] - coord[g - 1]);
        std::swap(prev, cur);
    }
    return prev[grid - 1];
}

}  // namespace sigvis
