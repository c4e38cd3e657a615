#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "sigvis/path.hpp"
#include "sigvis/rng.hpp"
#include "sigvis/transforms.hpp"

namespace sigvis {

/// Outcome of one numerical identity check: the worst absolute deviation
/// over every coefficient the check compares.
struct CheckReport {
    std::string name;
    double max_abs_error = 0.0;
    std::size_t num_coefficients = 0;
    bool passed = false;
};

/// One JSON object, single line, fields name/max_abs_error/num_coefficients/passed.
std::string check_report_json(const CheckReport& report);

/// Signature of a concatenation against the tensor product of the pieces'
/// signatures. Endpoints of x and y must match.
CheckReport check_chen_identity(const PiecewiseLinearPath& x,
                                const PiecewiseLinearPath& y, int depth,
                                double tol = 1e-10);

/// Signature of x * reverse(x) against the unit series.
CheckReport check_cancellation(const PiecewiseLinearPath& x, int depth,
                               double tol = 1e-10);

/// Signature of the visibility-lifted path against the split-sum over
/// prefix/suffix and base-path coefficients, for every word up to the depth
/// over the lifted alphabet. The right side never forms the lifted path.
CheckReport check_lift_decomposition(const PiecewiseLinearPath& x, Visibility v,
                                     int depth, double tol = 1e-10);

/// The four closed-form identities tying lifted coefficients that touch the
/// flag letter to base-path coefficients and endpoint monomials, for every
/// word J over the base alphabet with |J| <= depth-1. Requires depth >= 2.
CheckReport check_lift_embedding(const PiecewiseLinearPath& x, int depth,
                                 double tol = 1e-10);

/// Level-1 coefficients of the lifted signatures on the base letters: the
/// Initial variant exposes the tail position, the Tail variant exposes the
/// negated initial position.
CheckReport check_level_one_positions(const PiecewiseLinearPath& x,
                                      double tol = 1e-12);

/// Lifted signatures of x and of refine(x, 3) agree for both variants:
/// the constructions respect tree-like equivalence.
CheckReport check_tree_preservation(const PiecewiseLinearPath& x, int depth,
                                    double tol = 1e-10);

struct PathGenOptions {
    int min_knots = 2;
    int max_knots = 8;
    double coord_lo = -2.0;
    double coord_hi = 2.0;
};

/// Random path with uniform knot count and coordinates, knot times 1..n.
PiecewiseLinearPath random_path(Rng& rng, int dim,
                                const PathGenOptions& opt = {});

struct SuiteOptions {
    int trials = 200;  // per (dimension, depth) configuration
    std::uint64_t seed = 42;
};

/// Runs every check across dimensions 1..3 and depths 2..5, aggregating one
/// report per check kind with the worst error seen.
std::vector<CheckReport> run_verification_suite(const SuiteOptions& opt = {});

}  // namespace sigvis
