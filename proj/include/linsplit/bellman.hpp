#pragma once

#include <algorithm>
#include <cstddef>

#include "model.hpp"

// Bellman splits over the depot-copy DAG. Each inner loop extends route
// (i, j] one customer at a time with running cost/load/time state. The hard
// variants stop as soon as the route becomes infeasible, the soft ones scan
// every j.

namespace linsplit {

namespace detail {
inline void relax(SplitResult& r, std::size_t i, std::size_t j, double arc) {
    const double value = r.pot[i] + arc;
    if (value < r.pot[j]) {
        r.pot[j] = value;
        r.pred[j] = i;
    }
}
} // namespace detail

inline SplitResult bellman_cvrp(const TourData& data) {
    const std::size_t n = data.n;
    SplitResult r = empty_result(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (!(r.pot[i] < infinity)) continue;
        double load = 0.0;
        double cost = data.cost_out[i + 1];
        for (std::size_t j = i + 1; j <= n; ++j) {
            load += data.demand[j];
            if (load > data.capacity) break;
            if (j > i + 1) cost += data.step_cost[j];
            detail::relax(r, i, j, cost + data.cost_in[j]);
        }
    }
    finish(r, n);
    return r;
}

inline SplitResult bellman_vrpspdtw(const TourData& data) {
    const std::size_t n = data.n;
    SplitResult r = empty_result(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (!(r.pot[i] < infinity)) continue;
        double cost = data.cost_out[i + 1];
        double delivered = 0.0; // deliveries still on board at the depot
        double swing = 0.0;     // pickups minus deliveries so far
        double peak = 0.0;      // highest swing, the depot counts as 0
        double start = 0.0;
        for (std::size_t j = i + 1; j <= n; ++j) {
            delivered += data.demand[j];
            swing += data.pickup[j] - data.demand[j];
            peak = std::max(peak, swing);
            if (delivered + peak > data.capacity) break;
            if (j == i + 1) {
                start = std::max(data.time_out[j], data.open[j]);
            } else {
                cost += data.step_cost[j];
                start = std::max(start + data.service[j - 1] + data.step_time[j], data.open[j]);
            }
            if (start > data.latest(j)) break;
            detail::relax(r, i, j, cost + data.cost_in[j]);
        }
    }
    finish(r, n);
    return r;
}

inline SplitResult bellman_soft_vrpspd(const TourData& data, const PenaltyParams& params) {
    validate_params(params);
    const std::size_t n = data.n;
    SplitResult r = empty_result(n);
    for (std::size_t i = 0; i < n; ++i) {
        double cost = data.cost_out[i + 1];
        double delivered = 0.0;
        double swing = 0.0;
        double peak = 0.0;
        for (std::size_t j = i + 1; j <= n; ++j) {
            if (j > i + 1) cost += data.step_cost[j];
            delivered += data.demand[j];
            swing += data.pickup[j] - data.demand[j];
            peak = std::max(peak, swing);
            const double excess = std::max(delivered + peak - data.capacity, 0.0);
            detail::relax(r, i, j, cost + data.cost_in[j] + params.alpha * excess);
        }
    }
    finish(r, n);
    return r;
}

inline SplitResult bellman_soft_vrptw(const TourData& data, const PenaltyParams& params) {
    validate_params(params);
    const std::size_t n = data.n;
    SplitResult r = empty_result(n);
    for (std::size_t i = 0; i < n; ++i) {
        double cost = data.cost_out[i + 1];
        double load = 0.0;
        double leave = 0.0;
        double warp = 0.0;
        for (std::size_t j = i + 1; j <= n; ++j) {
            double start;
            if (j == i + 1) {
                start = std::max(data.time_out[j], data.open[j]);
            } else {
                cost += data.step_cost[j];
                start = std::max(leave + data.service[j - 1] + data.step_time[j], data.open[j]);
            }
            const double step_warp = std::max(0.0, start - data.latest(j));
            warp += step_warp;
            leave = start - step_warp;
            load += data.demand[j];
            const double excess = std::max(load - data.capacity, 0.0);
            detail::relax(r, i, j, cost + data.cost_in[j] + params.alpha * excess + params.beta * warp);
        }
    }
    finish(r, n);
    return r;
}

} // namespace linsplit
