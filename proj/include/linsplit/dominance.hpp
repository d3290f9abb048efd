#pragma once

#include <algorithm>
#include <cstddef>
#include <span>
#include <vector>

#include "model.hpp"

// Constant-time predicates over TourData and the current labels. All
// comparisons are strict, so ties favour the later index.

namespace linsplit {

using Labels = std::span<const double>;

inline bool dominates(Labels pot, const TourData& data, std::size_t i, std::size_t j) {
    LINSPLIT_EXPECTS(i < j && j < data.n);
    return pot[i] + data.cost_out[i + 1] + data.C[j + 1] - data.C[i + 1] < pot[j] + data.cost_out[j + 1];
}

inline bool dominates_h(const TourData& data, std::size_t i, std::size_t j) {
    LINSPLIT_EXPECTS(i < j && j <= data.n);
    return data.D[j] - data.D[i] > data.P[j] - data.P[i];
}

inline bool dominates_a(const TourData& data, std::size_t i, std::size_t j) {
    LINSPLIT_EXPECTS(0 < i && i < j && j <= data.n);
    return data.open[i] + data.S[j] - data.S[i] > data.open[j];
}

inline bool infeasible_d(const TourData& data, std::size_t i, std::size_t j) {
    return data.D[j] - data.D[i] > data.capacity;
}

// j = highest(i,k)
inline bool infeasible_h(const TourData& data, std::size_t i, std::size_t j, std::size_t k) {
    return data.P[j] - data.P[i] + data.D[k] - data.D[j] > data.capacity;
}

// arrival at k for route (i,k] given j = wait(i,k) and no violation before k
inline double arrival_a(const TourData& data, std::size_t i, std::size_t j, std::size_t k) {
    return std::max(data.time_out[i + 1] + data.S[k] - data.S[i + 1], data.open[j] + data.S[k] - data.S[j]);
}

inline bool infeasible_a(const TourData& data, std::size_t i, std::size_t j, std::size_t k) {
    return arrival_a(data, i, j, k) > data.latest(k);
}

inline double capacity_penalty(const TourData& data, const PenaltyParams& params, std::size_t i, std::size_t h,
                               std::size_t x) {
    return params.alpha * std::max(data.P[h] - data.P[i] + data.D[x] - data.D[h] - data.capacity, 0.0);
}

inline bool dominates_alpha_p(Labels pot, const TourData& data, const PenaltyParams& params, std::size_t i,
                              std::size_t j) {
    LINSPLIT_EXPECTS(i < j && j < data.n);
    return pot[i] + data.cost_out[i + 1] + data.C[j + 1] - data.C[i + 1] + params.alpha * (data.P[j] - data.P[i]) <
           pot[j] + data.cost_out[j + 1];
}

// hi = highest(i,x), hk = highest(k,x)
inline bool dominates_alpha(Labels pot, const TourData& data, const PenaltyParams& params, std::size_t i,
                            std::size_t hi, std::size_t k, std::size_t hk, std::size_t x) {
    LINSPLIT_EXPECTS(i < k && k < x && x <= data.n);
    return pot[i] + data.cost_out[i + 1] + data.C[k + 1] - data.C[i + 1] + capacity_penalty(data, params, i, hi, x) <
           pot[k] + data.cost_out[k + 1] + capacity_penalty(data, params, k, hk, x);
}

// r[i] > 0: route (i,.] first warps at q[i] by r[i]; otherwise no warp yet
struct WarpState {
    std::vector<double> r;
    std::vector<std::size_t> q;

    explicit WarpState(std::size_t n = 0) : r(n + 1, 0.0), q(n + 1, 0) {}
};

inline double demand_penalty(const TourData& data, const PenaltyParams& params, std::size_t i, std::size_t x) {
    return params.alpha * std::max(data.D[x] - data.D[i] - data.capacity, 0.0);
}

// total warp of route (i,x]; once a route warps it follows the undivided tour
inline double route_warp(const TourData& data, const WarpState& warp, std::size_t i, std::size_t x) {
    if (warp.r[i] > 0.0) return warp.r[i] + data.W[x] - data.W[warp.q[i]];
    return 0.0;
}

inline double warp_penalty(const TourData& data, const PenaltyParams& params, const WarpState& warp, std::size_t i,
                           std::size_t x) {
    return params.beta * route_warp(data, warp, i, x);
}

inline bool dominates_alpha_d_beta_a(Labels pot, const TourData& data, const PenaltyParams& params,
                                     const WarpState& warp, std::size_t i, std::size_t j, std::size_t x) {
    LINSPLIT_EXPECTS(i < j && j < x && x <= data.n);
    return pot[i] + data.cost_out[i + 1] + data.C[j + 1] - data.C[i + 1] + demand_penalty(data, params, i, x) +
               warp_penalty(data, params, warp, i, x) <
           pot[j] + data.cost_out[j + 1] + demand_penalty(data, params, j, x) + warp_penalty(data, params, warp, j, x);
}

// positive: route (i,x] without earlier warp first warps at x by this much
inline double initial_warp(const TourData& data, std::size_t i, std::size_t j, std::size_t x) {
    return arrival_a(data, i, j, x) - data.latest(x);
}

} // namespace linsplit
