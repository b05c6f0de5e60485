#pragma once

#include <cstdint>
#include <functional>
#include <vector>

namespace qpr {

using Objective = std::function<double(const std::vector<double>&)>;

/// Derivative-free simplex search over a bounded box. Starts are drawn
/// uniformly inside the bounds; out-of-box proposals are reflected back in
/// rather than clipped.
struct OptimizerConfig {
    int max_evaluations = 1000;
    double simplex_tolerance = 1e-4;   // stop when the simplex diameter shrinks below this
    std::vector<double> lower;
    std::vector<double> upper;
    int n_starts = 20;
    std::uint64_t seed = 0;
};

struct MinimizeResult {
    std::vector<double> best_point;
    double best_value = 0.0;
    int evaluations = 0;
    std::uint64_t seed = 0;  // the seed this run actually used
};

struct MultiStartResult {
    std::vector<MinimizeResult> starts;
    std::size_t best_index = 0;

    const MinimizeResult& best() const { return starts[best_index]; }
};

/// Single Nelder-Mead run from a seeded random start. Throws on a non-finite
/// objective value.
MinimizeResult minimize(const Objective& objective, const OptimizerConfig& config);

/// n_starts independent runs with per-start seeds drawn from config.seed.
/// Start k's seed stream does not depend on n_starts, so enlarging the run
/// only appends starts.
MultiStartResult multi_start(const Objective& objective, const OptimizerConfig& config);

}  // namespace qpr
