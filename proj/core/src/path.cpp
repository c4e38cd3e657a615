#include "sigvis/path.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "sigvis/errors.hpp"

namespace sigvis {

void validate_stream(const Stream& s) {
    if (s.points.empty()) throw ShapeError("stream has no points");
    const std::size_t width = s.points[0].size();
    if (width == 0) throw ShapeError("stream points have zero width");
    for (std::size_t i = 0; i < s.points.size(); ++i) {
        if (s.points[i].size() != width)
            throw ShapeError("stream row " + std::to_string(i) +
                             " has width " + std::to_string(s.points[i].size()) +
                             ", expected " + std::to_string(width));
        for (double v : s.points[i])
            if (!std::isfinite(v))
                throw ShapeError("stream row " + std::to_string(i) +
                                 " has a non-finite value");
    }
}

PiecewiseLinearPath::PiecewiseLinearPath(std::vector<double> times,
                                         std::vector<double> positions, int dim)
    : times_(std::move(times)), positions_(std::move(positions)), dim_(dim) {
    if (dim_ < 1) throw ShapeError("path dimension must be positive");
    if (times_.empty()) throw ShapeError("path needs at least one knot");
    if (positions_.size() != times_.size() * static_cast<std::size_t>(dim_))
        throw ShapeError("path position count does not match knot count");
    for (std::size_t i = 1; i < times_.size(); ++i)
        if (!(times_[i] > times_[i - 1]))
            throw ShapeError("path knot times must be strictly increasing");
}

std::vector<double> PiecewiseLinearPath::evaluate(double t) const {
    const std::size_t d = static_cast<std::size_t>(dim_);
    if (t <= times_.front())
        return {positions_.begin(), positions_.begin() + d};
    if (t >= times_.back())
        return {positions_.end() - d, positions_.end()};
    const auto it = std::upper_bound(times_.begin(), times_.end(), t);
    const std::size_t hi = static_cast<std::size_t>(it - times_.begin());
    const std::size_t lo = hi - 1;
    const double w = (t - times_[lo]) / (times_[hi] - times_[lo]);
    std::vector<double> out(d);
    for (std::size_t j = 0; j < d; ++j) {
        const double a = positions_[lo * d + j];
        const double b = positions_[hi * d + j];
        out[j] = a + w * (b - a);
    }
    return out;
}

PiecewiseLinearPath path_from_stream(const Stream& s) {
    validate_stream(s);
    const std::size_t n = s.points.size();
    const std::size_t d = s.points[0].size();
    std::vector<double> times(n);
    std::vector<double> positions(n * d);
    for (std::size_t i = 0; i < n; ++i) {
        times[i] = static_cast<double>(i + 1);
        std::copy(s.points[i].begin(), s.points[i].end(),
                  positions.begin() + i * d);
    }
    return PiecewiseLinearPath(std::move(times), std::move(positions),
                               static_cast<int>(d));
}

PiecewiseLinearPath concat(const PiecewiseLinearPath& x,
                           const PiecewiseLinearPath& y) {
    if (x.dim() != y.dim())
        throw ShapeError("concat: path dimensions differ");
    const auto tail = x.tail_position();
    const auto head = y.initial_position();
    double max_dev = 0.0;
    for (int j = 0; j < x.dim(); ++j)
        max_dev = std::max(max_dev, std::abs(tail[j] - head[j]));
    if (max_dev > 1e-9)
        throw ShapeError("concat: endpoint mismatch, max coordinate deviation " +
                         std::to_string(max_dev));

    const double shift = x.end_time() - y.start_time();
    const std::size_t d = static_cast<std::size_t>(x.dim());
    std::vector<double> times = x.times();
    std::vector<double> positions = x.positions();
    times.reserve(x.num_knots() + y.num_knots() - 1);
    positions.reserve((x.num_knots() + y.num_knots() - 1) * d);
    for (std::size_t i = 1; i < y.num_knots(); ++i) {
        times.push_back(y.time(i) + shift);
        const auto pos = y.position(i);
        positions.insert(positions.end(), pos.begin(), pos.end());
    }
    return PiecewiseLinearPath(std::move(times), std::move(positions), x.dim());
}

PiecewiseLinearPath reverse(const PiecewiseLinearPath& x) {
    const std::size_t n = x.num_knots();
    const std::size_t d = static_cast<std::size_t>(x.dim());
    const double t0 = x.start_time();
    const double t1 = x.end_time();
    std::vector<double> times(n);
    std::vector<double> positions(n * d);
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t src = n - 1 - i;
        times[i] = t0 + (t1 - x.time(src));
        const auto pos = x.position(src);
        std::copy(pos.begin(), pos.end(), positions.begin() + i * d);
    }
    return PiecewiseLinearPath(std::move(times), std::move(positions), x.dim());
}

PiecewiseLinearPath translate(const PiecewiseLinearPath& x,
                              std::span<const double> c) {
    if (c.size() != static_cast<std::size_t>(x.dim()))
        throw ShapeError("translate: offset dimension does not match path");
    const std::size_t d = c.size();
    std::vector<double> positions = x.positions();
    for (std::size_t i = 0; i < positions.size(); ++i)
        positions[i] += c[i % d];
    return PiecewiseLinearPath(x.times(), std::move(positions), x.dim());
}

PiecewiseLinearPath refine(const PiecewiseLinearPath& x, int m) {
    if (m < 1) throw ShapeError("refine: subdivision count must be at least 1");
    if (m == 1 || x.num_knots() == 1) return x;
    const std::size_t d = static_cast<std::size_t>(x.dim());
    const std::size_t segs = x.num_segments();
    std::vector<double> times;
    std::vector<double> positions;
    times.reserve(segs * static_cast<std::size_t>(m) + 1);
    positions.reserve(times.capacity() * d);
    for (std::size_t i = 0; i < segs; ++i) {
        const auto a = x.position(i);
        const auto b = x.position(i + 1);
        for (int k = 0; k < m; ++k) {
            const double w = static_cast<double>(k) / m;
            times.push_back(x.time(i) + w * (x.time(i + 1) - x.time(i)));
            for (std::size_t j = 0; j < d; ++j)
                positions.push_back(a[j] + w * (b[j] - a[j]));
        }
    }
    times.push_back(x.end_time());
    const auto last = x.tail_position();
    positions.insert(positions.end(), last.begin(), last.end());
    return PiecewiseLinearPath(std::move(times), std::move(positions), x.dim());
}

}  // namespace sigvis
