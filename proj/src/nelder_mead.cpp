#include "qpr/nelder_mead.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>

namespace qpr {

namespace {

double fold_into_bounds(double x, double lo, double hi) {
    if (!(hi > lo)) return lo;
    const double width = hi - lo;
    double u = std::fmod(x - lo, 2.0 * width);
    if (u < 0.0) u += 2.0 * width;
    return lo + (u <= width ? u : 2.0 * width - u);
}

void fold_point(std::vector<double>& point, const OptimizerConfig& config) {
    for (std::size_t d = 0; d < point.size(); ++d) {
        point[d] = fold_into_bounds(point[d], config.lower[d], config.upper[d]);
    }
}

void check_config(const OptimizerConfig& config) {
    if (config.max_evaluations < 1) {
        throw std::invalid_argument("OptimizerConfig: max_evaluations must be >= 1");
    }
    if (!(config.simplex_tolerance > 0.0)) {
        throw std::invalid_argument("OptimizerConfig: simplex_tolerance must be positive");
    }
    if (config.lower.empty() || config.lower.size() != config.upper.size()) {
        throw std::invalid_argument("OptimizerConfig: bounds must be non-empty and equal-sized");
    }
    for (std::size_t d = 0; d < config.lower.size(); ++d) {
        if (config.upper[d] < config.lower[d]) {
            throw std::invalid_argument("OptimizerConfig: upper bound below lower bound");
        }
    }
}

double distance(const std::vector<double>& a, const std::vector<double>& b) {
    double acc = 0.0;
    for (std::size_t d = 0; d < a.size(); ++d) {
        const double diff = a[d] - b[d];
        acc += diff * diff;
    }
    return std::sqrt(acc);
}

}  // namespace

MinimizeResult minimize(const Objective& objective, const OptimizerConfig& config) {
    check_config(config);
    const std::size_t dims = config.lower.size();
    std::mt19937_64 rng(config.seed);

    int evaluations = 0;
    auto evaluate = [&](const std::vector<double>& point) {
        const double value = objective(point);
        ++evaluations;
        if (!std::isfinite(value)) {
            std::ostringstream oss;
            oss << "minimize: objective returned a non-finite value at (";
            for (std::size_t d = 0; d < point.size(); ++d) {
                oss << (d ? ", " : "") << point[d];
            }
            oss << ")";
            throw std::runtime_error(oss.str());
        }
        return value;
    };

    // random start inside the box, simplex edge 10% of each dimension's range
    std::vector<double> start(dims);
    for (std::size_t d = 0; d < dims; ++d) {
        const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
        start[d] = config.lower[d] + u * (config.upper[d] - config.lower[d]);
    }
    std::vector<std::vector<double>> simplex;
    simplex.push_back(start);
    for (std::size_t d = 0; d < dims; ++d) {
        std::vector<double> vertex = start;
        vertex[d] += 0.1 * (config.upper[d] - config.lower[d]);
        fold_point(vertex, config);
        simplex.push_back(std::move(vertex));
    }

    std::vector<double> values;
    values.reserve(simplex.size());
    for (const auto& vertex : simplex) {
        values.push_back(evaluate(vertex));
        if (evaluations >= config.max_evaluations) break;
    }
    while (values.size() < simplex.size()) {
        // budget exhausted during setup; pad so ordering below stays valid
        values.push_back(values.back());
    }

    std::vector<std::size_t> order(simplex.size());
    std::iota(order.begin(), order.end(), 0);
    auto sort_order = [&]() {
        std::stable_sort(order.begin(), order.end(),
                         [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
    };
    sort_order();

    constexpr double kReflect = 1.0;
    constexpr double kExpand = 2.0;
    constexpr double kContract = 0.5;
    constexpr double kShrink = 0.5;

    while (evaluations < config.max_evaluations) {
        const std::size_t best = order.front();
        const std::size_t worst = order.back();
        const std::size_t second_worst = order[order.size() - 2];

        double diameter = 0.0;
        for (std::size_t k = 1; k < order.size(); ++k) {
            diameter = std::max(diameter, distance(simplex[best], simplex[order[k]]));
        }
        if (diameter < config.simplex_tolerance) break;

        std::vector<double> centroid(dims, 0.0);
        for (std::size_t k = 0; k + 1 < order.size(); ++k) {
            for (std::size_t d = 0; d < dims; ++d) {
                centroid[d] += simplex[order[k]][d];
            }
        }
        for (double& c : centroid) c /= static_cast<double>(dims);

        auto blend = [&](double t) {
            std::vector<double> point(dims);
            for (std::size_t d = 0; d < dims; ++d) {
                point[d] = centroid[d] + t * (centroid[d] - simplex[worst][d]);
            }
            fold_point(point, config);
            return point;
        };

        auto reflected = blend(kReflect);
        const double f_reflected = evaluate(reflected);

        bool need_shrink = false;
        if (f_reflected < values[best]) {
            if (evaluations < config.max_evaluations) {
                auto expanded = blend(kExpand);
                const double f_expanded = evaluate(expanded);
                if (f_expanded < f_reflected) {
                    simplex[worst] = std::move(expanded);
                    values[worst] = f_expanded;
                } else {
                    simplex[worst] = std::move(reflected);
                    values[worst] = f_reflected;
                }
            } else {
                simplex[worst] = std::move(reflected);
                values[worst] = f_reflected;
            }
        } else if (f_reflected < values[second_worst]) {
            simplex[worst] = std::move(reflected);
            values[worst] = f_reflected;
        } else if (evaluations < config.max_evaluations) {
            if (f_reflected < values[worst]) {
                auto contracted = blend(kContract);  // outside contraction
                const double f_contracted = evaluate(contracted);
                if (f_contracted <= f_reflected) {
                    simplex[worst] = std::move(contracted);
                    values[worst] = f_contracted;
                } else {
                    need_shrink = true;
                }
            } else {
                auto contracted = blend(-kContract);  // inside contraction
                const double f_contracted = evaluate(contracted);
                if (f_contracted < values[worst]) {
                    simplex[worst] = std::move(contracted);
                    values[worst] = f_contracted;
                } else {
                    need_shrink = true;
                }
            }
        } else {
            break;
        }

        if (need_shrink) {
            for (std::size_t k = 1; k < order.size(); ++k) {
                const std::size_t idx = order[k];
                for (std::size_t d = 0; d < dims; ++d) {
                    simplex[idx][d] =
                        simplex[best][d] + kShrink * (simplex[idx][d] - simplex[best][d]);
                }
                fold_point(simplex[idx], config);
                if (evaluations >= config.max_evaluations) break;
                values[idx] = evaluate(simplex[idx]);
            }
        }
        sort_order();
    }

    sort_order();
    MinimizeResult result;
    result.best_point = simplex[order.front()];
    result.best_value = values[order.front()];
    result.evaluations = evaluations;
    result.seed = config.seed;
    return result;
}

MultiStartResult multi_start(const Objective& objective, const OptimizerConfig& config) {
    check_config(config);
    if (config.n_starts < 1) {
        throw std::invalid_argument("multi_start: n_starts must be >= 1");
    }
    std::mt19937_64 master(config.seed);
    MultiStartResult out;
    for (int k = 0; k < config.n_starts; ++k) {
        OptimizerConfig start_config = config;
        start_config.seed = master();
        out.starts.push_back(minimize(objective, start_config));
        if (out.starts.back().best_value < out.starts[out.best_index].best_value) {
            out.best_index = out.starts.size() - 1;
        }
    }
    return out;
}

}  // namespace qpr
