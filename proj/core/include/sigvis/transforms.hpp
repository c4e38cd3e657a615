#pragma once

#include <span>
#include <string>
#include <vector>

#include "sigvis/path.hpp"

namespace sigvis {

enum class TransformKind { Time, LeadLag, VisI, VisT, Basepoint, Scale };

/// One step of a transform chain. Chains apply left to right; a visibility
/// step (VisI/VisT) must be the last element and appear at most once.
struct TransformSpec {
    TransformKind kind;
    double factor = 1.0;  // Scale only

    friend bool operator==(const TransformSpec&, const TransformSpec&) = default;
};

/// Parses the canonical comma-separated form, e.g. "time,leadlag,vis_i" or
/// "scale:0.5,vis_t". Empty text gives the empty chain. Throws ConfigError
/// on unknown kinds or malformed scale factors.
std::vector<TransformSpec> parse_chain(const std::string& text);

/// Inverse of parse_chain.
std::string format_chain(const std::vector<TransformSpec>& chain);

/// Enforces the ordering rules; throws ConfigError on violation.
void validate_chain(const std::vector<TransformSpec>& chain);

/// Width of the stream a chain produces from width-d input.
int chain_output_dim(int dim, const std::vector<TransformSpec>& chain);

/// Prepends a clock coordinate (i-1)/(n-1), i = 1..n (0 for a single row).
Stream time_augment(const Stream& s);

/// Doubled stream of 2n-1 rows over 2d columns: row 2i-1 = (x_i, x_i),
/// row 2i = (x_{i+1}, x_i). The lead copy occupies the first d columns and
/// advances one step ahead of the lag copy.
Stream lead_lag(const Stream& s);

/// Rows: zero vector, (x_1, 0), then (x_k, 1) for k = 1..n. The flag
/// coordinate is appended last (column d+1).
Stream visibility_i_discrete(const Stream& s);

/// Rows: (x_k, 1) for k = 1..n, then (x_n, 0), then the zero vector.
Stream visibility_t_discrete(const Stream& s);

/// Prepends a zero row, anchoring the stream at the origin.
Stream with_basepoint(const Stream& s);

/// Multiplies every coordinate by `factor`.
Stream scale_stream(const Stream& s, double factor);

/// The continuous two-segment run origin -> (x0, 0) -> (x0, 1) that the
/// I-visibility construction prepends to the lifted path.
PiecewiseLinearPath visibility_prefix_path(std::span<const double> x0);

/// The reversal of visibility_prefix_path(x1): (x1, 1) -> (x1, 0) -> origin,
/// appended by the T-visibility construction.
PiecewiseLinearPath visibility_suffix_path(std::span<const double> x1);

/// Appends a constant coordinate 1 to every knot.
PiecewiseLinearPath lift_visible(const PiecewiseLinearPath& x);

/// Left-to-right application of a validated chain.
Stream apply_chain(const Stream& s, const std::vector<TransformSpec>& chain);

/// Which endpoint a visibility construction anchors through the origin.
enum class Visibility { Initial, Tail };

/// The full continuous construction: prefix-run * lifted path (Initial), or
/// lifted path * suffix-run (Tail).
PiecewiseLinearPath visibility_lift_path(const PiecewiseLinearPath& x,
                                         Visibility v);

}  // namespace sigvis
