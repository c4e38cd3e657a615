#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace sigvis {

/// A raw observation stream: n rows of d coordinates, ordered by the
/// implicit time index 1..n.
struct Stream {
    std::vector<std::vector<double>> points;

    std::size_t size() const { return points.size(); }
    int dim() const { return points.empty() ? 0 : static_cast<int>(points[0].size()); }
};

/// Throws if the stream is empty, ragged, zero-width, or non-finite.
void validate_stream(const Stream& s);

/// A path that is linear between knots with strictly increasing knot times.
/// A single-knot path is legal (constant, unit signature).
class PiecewiseLinearPath {
public:
    PiecewiseLinearPath(std::vector<double> times, std::vector<double> positions,
                        int dim);

    int dim() const { return dim_; }
    std::size_t num_knots() const { return times_.size(); }
    std::size_t num_segments() const { return times_.size() - 1; }

    double time(std::size_t i) const { return times_[i]; }
    std::span<const double> position(std::size_t i) const {
        return {positions_.data() + i * static_cast<std::size_t>(dim_),
                static_cast<std::size_t>(dim_)};
    }

    std::span<const double> initial_position() const { return position(0); }
    std::span<const double> tail_position() const { return position(num_knots() - 1); }

    double start_time() const { return times_.front(); }
    double end_time() const { return times_.back(); }

    const std::vector<double>& times() const { return times_; }
    /// Row-major knot positions, dim() values per knot.
    const std::vector<double>& positions() const { return positions_; }

    /// Linear interpolation; t is clamped to [start_time, end_time].
    std::vector<double> evaluate(double t) const;

private:
    std::vector<double> times_;
    std::vector<double> positions_;
    int dim_;
};

/// Knot i at time i (i = 1..n) with position equal to row i of the stream.
PiecewiseLinearPath path_from_stream(const Stream& s);

/// Traverses x then y; y's times are shifted so its first knot lands on x's
/// last, and the shared junction knot is stored once. Requires the tail of x
/// to match the head of y within 1e-9 per coordinate.
PiecewiseLinearPath concat(const PiecewiseLinearPath& x,
                           const PiecewiseLinearPath& y);

/// Same image traversed backwards over the same time interval.
PiecewiseLinearPath reverse(const PiecewiseLinearPath& x);

/// Every knot position shifted by c; times unchanged.
PiecewiseLinearPath translate(const PiecewiseLinearPath& x,
                              std::span<const double> c);

/// Each segment split into m collinear subsegments of equal duration; the
/// image of the path is unchanged.
PiecewiseLinearPath refine(const PiecewiseLinearPath& x, int m);

}  // namespace sigvis
