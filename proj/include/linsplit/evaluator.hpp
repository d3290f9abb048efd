#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

#include "model.hpp"

// Direct per-route evaluation. Everything here walks the route customer by
// customer; the constant-time shortcuts live in dominance.hpp.

namespace linsplit {

enum class Variant { cvrp, hard_spdtw, soft_spd, soft_tw };

inline void check_interval(const TourData& data, std::size_t i, std::size_t j) {
    if (!(i < j && j <= data.n))
        throw Error(Errc::invalid_interval,
                    "(" + std::to_string(i) + ", " + std::to_string(j) + "] with n = " + std::to_string(data.n));
}

inline double route_cost(const TourData& data, std::size_t i, std::size_t j) {
    check_interval(data, i, j);
    double cost = data.cost_out[i + 1];
    for (std::size_t z = i + 2; z <= j; ++z) cost += data.step_cost[z];
    return cost + data.cost_in[j];
}

inline double route_cost_prefix(const TourData& data, std::size_t i, std::size_t j) {
    check_interval(data, i, j);
    return prefix_route_cost(data, i, j);
}

inline double route_demand(const TourData& data, std::size_t i, std::size_t j) {
    check_interval(data, i, j);
    double total = 0.0;
    for (std::size_t z = i + 1; z <= j; ++z) total += data.demand[z];
    return total;
}

struct LoadProfile {
    std::size_t highest = 0;
    double max_load = 0.0;
    bool feasible = true;
};

// load on board after leaving position z (z = i is the depot departure);
// ties go to the later position
inline LoadProfile route_load_profile(const TourData& data, std::size_t i, std::size_t j) {
    double load = route_demand(data, i, j);
    LoadProfile out{i, load, true};
    for (std::size_t z = i + 1; z <= j; ++z) {
        load += data.pickup[z] - data.demand[z];
        if (load >= out.max_load) {
            out.max_load = load;
            out.highest = z;
        }
    }
    out.feasible = out.max_load <= data.capacity;
    return out;
}

enum class ScheduleMode { hard, warp };

struct Schedule {
    std::vector<double> start; // A(i,z) for z = i+1..j, before any warp
    bool feasible = true;
    double total_warp = 0.0;
    std::size_t first_warp = npos; // warp mode: first position with B > 0
    double first_warp_amount = 0.0;
};

inline Schedule route_schedule(const TourData& data, std::size_t i, std::size_t j, ScheduleMode mode) {
    check_interval(data, i, j);
    Schedule out;
    out.start.reserve(j - i);
    double leave = 0.0; // service start at the previous customer, after warp
    for (std::size_t z = i + 1; z <= j; ++z) {
        const double arrive = z == i + 1 ? data.time_out[z] : leave + data.service[z - 1] + data.step_time[z];
        const double start = std::max(arrive, data.open[z]);
        const double limit = data.latest(z);
        out.start.push_back(start);
        if (mode == ScheduleMode::hard) {
            if (start > limit) out.feasible = false;
            leave = start;
            continue;
        }
        const double warp = std::max(0.0, start - limit);
        if (warp > 0.0 && out.first_warp == npos) {
            out.first_warp = z;
            out.first_warp_amount = warp;
        }
        out.total_warp += warp;
        leave = start - warp;
    }
    if (mode == ScheduleMode::warp) out.feasible = out.total_warp == 0.0;
    return out;
}

// lowest y in (i, j] such that waiting at y forces no waiting at y+1..j
inline std::size_t route_wait(const TourData& data, std::size_t i, std::size_t j) {
    check_interval(data, i, j);
    for (std::size_t y = i + 1; y <= j; ++y) {
        double t = data.open[y];
        bool ok = true;
        for (std::size_t z = y + 1; z <= j && ok; ++z) {
            t += data.service[z - 1] + data.step_time[z];
            ok = t > data.open[z];
        }
        if (ok) return y;
    }
    return j;
}

inline double route_penalized_cost(const TourData& data, std::size_t i, std::size_t j, const PenaltyParams& params,
                                   Variant variant) {
    const double cost = route_cost(data, i, j);
    if (variant == Variant::soft_spd) {
        const LoadProfile load = route_load_profile(data, i, j);
        return cost + params.alpha * std::max(load.max_load - data.capacity, 0.0);
    }
    if (variant == Variant::soft_tw) {
        const double excess = std::max(route_demand(data, i, j) - data.capacity, 0.0);
        const Schedule sched = route_schedule(data, i, j, ScheduleMode::warp);
        return cost + params.alpha * excess + params.beta * sched.total_warp;
    }
    return cost;
}

inline bool route_feasible(const TourData& data, std::size_t i, std::size_t j, Variant variant) {
    switch (variant) {
    case Variant::cvrp: return route_demand(data, i, j) <= data.capacity;
    case Variant::hard_spdtw:
        return route_load_profile(data, i, j).feasible && route_schedule(data, i, j, ScheduleMode::hard).feasible;
    default: return true;
    }
}

} // namespace linsplit
