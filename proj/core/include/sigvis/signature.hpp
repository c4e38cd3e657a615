#pragma once

#include <span>

#include "sigvis/path.hpp"
#include "sigvis/tensor.hpp"

namespace sigvis {

/// Signature of one linear segment: the tensor exponential of its increment
/// read as a level-1 element. Exact for the segment.
TensorSeries segment_signature(std::span<const double> increment, int depth);

/// Truncated signature: left-to-right Chen product of the per-segment
/// exponentials. A single-knot path gives the unit series.
TensorSeries signature(const PiecewiseLinearPath& x, int depth);

/// tensor_log of the signature; zero constant term.
TensorSeries log_signature(const PiecewiseLinearPath& x, int depth);

/// Brute-force coordinate iterated integral of `x` along the word `w`,
/// computed by the defining recursion with trapezoidal accumulation on a
/// uniform grid of `steps` subintervals per segment. Shares no code with
/// the Chen-based computation above; used only as a cross-check.
double iterated_integral_oracle(const PiecewiseLinearPath& x, const Word& w,
                                int steps);

}  // namespace sigvis
