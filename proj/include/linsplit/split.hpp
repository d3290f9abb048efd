#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include "bellman.hpp"
#include "evaluator.hpp"
#include "linear.hpp"
#include "oracle.hpp"

namespace linsplit {

enum class Algorithm { bellman, linear, oracle, generalized };

inline std::string_view to_string(Variant v) {
    switch (v) {
    case Variant::cvrp: return "cvrp";
    case Variant::hard_spdtw: return "spdtw";
    case Variant::soft_spd: return "soft-spd";
    case Variant::soft_tw: return "soft-tw";
    }
    return "?";
}

inline std::string_view to_string(Algorithm a) {
    switch (a) {
    case Algorithm::bellman: return "bellman";
    case Algorithm::linear: return "linear";
    case Algorithm::oracle: return "oracle";
    case Algorithm::generalized: return "generalized";
    }
    return "?";
}

inline std::optional<Variant> parse_variant(std::string_view s) {
    for (Variant v : {Variant::cvrp, Variant::hard_spdtw, Variant::soft_spd, Variant::soft_tw})
        if (s == to_string(v)) return v;
    return std::nullopt;
}

inline std::optional<Algorithm> parse_algorithm(std::string_view s) {
    for (Algorithm a : {Algorithm::bellman, Algorithm::linear, Algorithm::oracle, Algorithm::generalized})
        if (s == to_string(a)) return a;
    return std::nullopt;
}

inline bool is_soft(Variant v) { return v == Variant::soft_spd || v == Variant::soft_tw; }

inline SplitResult run_split(const TourData& data, Variant variant, Algorithm algorithm,
                             const PenaltyParams& params = {}) {
    switch (algorithm) {
    case Algorithm::oracle: return oracle_split(data, variant, params);
    case Algorithm::bellman:
        switch (variant) {
        case Variant::cvrp: return bellman_cvrp(data);
        case Variant::hard_spdtw: return bellman_vrpspdtw(data);
        case Variant::soft_spd: return bellman_soft_vrpspd(data, params);
        case Variant::soft_tw: return bellman_soft_vrptw(data, params);
        }
        break;
    case Algorithm::linear:
        switch (variant) {
        case Variant::cvrp: return linear_cvrp(data);
        case Variant::hard_spdtw: return linear_vrpspdtw(data);
        case Variant::soft_spd: return linear_soft_vrpspd(data, params);
        case Variant::soft_tw: return linear_soft_vrptw(data, params);
        }
        break;
    case Algorithm::generalized:
        // the generalized skeleton needs an arc predicate; the hard variants
        // supply one (the time-window one evaluates routes directly)
        if (variant == Variant::cvrp)
            return generalized_split(data, [&](std::size_t i, std::size_t x) { return !infeasible_d(data, i, x); });
        if (variant == Variant::hard_spdtw)
            return generalized_split(
                data, [&](std::size_t i, std::size_t x) { return route_feasible(data, i, x, Variant::hard_spdtw); });
        throw Error(Errc::invalid_config, "the generalized split only covers hard variants");
    }
    throw Error(Errc::invalid_config, "unknown variant/algorithm");
}

// worst-case deque operation counts of the linear splits
inline std::size_t op_bound(Variant variant, std::size_t n) {
    switch (variant) {
    case Variant::cvrp: return 2 * n + 2;
    case Variant::hard_spdtw: return 6 * n + 2;
    case Variant::soft_spd: return 5 * n + 2;
    case Variant::soft_tw: return 6 * n + 2;
    }
    return 0;
}

inline bool costs_agree(double a, double b, double rel = 1e-9) {
    if (a == b) return true;
    return std::abs(a - b) <= rel * std::max({1.0, std::abs(a), std::abs(b)});
}

} // namespace linsplit
