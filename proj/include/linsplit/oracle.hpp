#pragma once

#include <cstddef>

#include "evaluator.hpp"
#include "model.hpp"

// Brute-force split: every arc (i, j) is evaluated from scratch with the
// route evaluator. O(n^3), used only as ground truth.

namespace linsplit {

inline constexpr std::size_t default_oracle_cap = 300;

struct ArcScan {
    bool admissible = false;
    double cost = infinity;
};

inline ArcScan oracle_route_scan(const TourData& data, std::size_t i, std::size_t j, Variant variant,
                                 const PenaltyParams& params) {
    check_interval(data, i, j);
    if (variant == Variant::cvrp || variant == Variant::hard_spdtw) {
        if (!route_feasible(data, i, j, variant)) return {};
        return {true, route_cost(data, i, j)};
    }
    return {true, route_penalized_cost(data, i, j, params, variant)};
}

// ties go to the smallest predecessor
inline SplitResult oracle_split(const TourData& data, Variant variant, const PenaltyParams& params = {},
                                std::size_t cap = default_oracle_cap) {
    validate_params(params);
    const std::size_t n = data.n;
    if (n > cap)
        throw Error(Errc::oracle_cap, "n = " + std::to_string(n) + " exceeds the oracle cap of " + std::to_string(cap));
    SplitResult r = empty_result(n);
    for (std::size_t j = 1; j <= n; ++j) {
        for (std::size_t i = 0; i < j; ++i) {
            if (!(r.pot[i] < infinity)) continue;
            const ArcScan arc = oracle_route_scan(data, i, j, variant, params);
            if (!arc.admissible) continue;
            const double value = r.pot[i] + arc.cost;
            if (value < r.pot[j]) {
                r.pot[j] = value;
                r.pred[j] = i;
            }
        }
    }
    finish(r, n);
    return r;
}

} // namespace linsplit
