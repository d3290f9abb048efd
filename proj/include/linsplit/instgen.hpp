#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include "model.hpp"

namespace linsplit {

// splitmix64, used to seed xoshiro256**
inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// xoshiro256** with a small integer/real interface that does not depend on
// the standard library's distribution implementations
class Rng {
public:
    explicit Rng(std::uint64_t seed, std::uint64_t stream = 0) {
        std::uint64_t sm = seed ^ (stream * 0xd1342543de82ef95ULL);
        for (auto& word : s_) word = splitmix64(sm);
    }

    std::uint64_t next() {
        const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
        const std::uint64_t t = s_[1] << 17;
        s_[2] ^= s_[0];
        s_[3] ^= s_[1];
        s_[1] ^= s_[2];
        s_[0] ^= s_[3];
        s_[2] ^= t;
        s_[3] = rotl(s_[3], 45);
        return result;
    }

    // [0, 1)
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    // [lo, hi], requires lo <= hi
    std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
        const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
        if (span == 0) return static_cast<std::int64_t>(next());
        const auto pick = static_cast<std::uint64_t>((static_cast<unsigned __int128>(next()) * span) >> 64);
        return lo + static_cast<std::int64_t>(pick);
    }

private:
    static std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }
    std::uint64_t s_[4];
};

// closing time used when an instance has no time windows
inline constexpr double open_horizon = 1e9;

struct BaseParams {
    std::size_t n = 100;
    std::uint64_t seed = 1;
    std::int64_t coord_max = 1000;
    std::int64_t demand_min = 1;
    std::int64_t demand_max = 100;
    double capacity = 100.0;
    Rounding rounding = Rounding::ceil;
};

struct Generated {
    Instance instance;
    Tour tour;
};

namespace detail {
inline std::string num(double v) {
    std::ostringstream os;
    os.precision(17);
    os << v;
    return os.str();
}
} // namespace detail

inline Generated generate_base(const BaseParams& p) {
    if (p.coord_max < 0 || p.demand_min < 0 || p.demand_min > p.demand_max || !(p.capacity >= 0.0))
        throw Error(Errc::invalid_config, "bad generator parameters");
    Rng rng(p.seed, 0);
    Generated g;
    Instance& inst = g.instance;
    inst.capacity = p.capacity;
    inst.horizon = open_horizon;
    inst.rounding = p.rounding;
    inst.nodes.assign(p.n + 1, depot_node(open_horizon));
    inst.coords.resize(p.n + 1);
    for (std::size_t i = 0; i <= p.n; ++i) {
        inst.coords[i] = {static_cast<double>(rng.uniform_int(0, p.coord_max)),
                          static_cast<double>(rng.uniform_int(0, p.coord_max))};
        if (i > 0) inst.nodes[i].demand = static_cast<double>(rng.uniform_int(p.demand_min, p.demand_max));
    }
    g.tour.order.resize(p.n);
    for (std::size_t i = 0; i < p.n; ++i) g.tour.order[i] = i + 1;
    for (std::size_t i = p.n; i > 1; --i) {
        const auto k = static_cast<std::size_t>(rng.uniform_int(0, static_cast<std::int64_t>(i) - 1));
        std::swap(g.tour.order[i - 1], g.tour.order[k]);
    }
    inst.meta.seed = p.seed;
    inst.meta.generator_params = {
        {"kind", "base"},
        {"coord_max", std::to_string(p.coord_max)},
        {"demand_range", std::to_string(p.demand_min) + ".." + std::to_string(p.demand_max)},
        {"rounding", p.rounding == Rounding::ceil ? "ceil" : "none"},
    };
    return g;
}

// Splits each demand into delivery and pickup, sets a constant service time,
// picks the horizon from the first 20 customers of the tour and assigns
// windows that keep every singleton route feasible.
inline Instance extend_to_spdtw(const Instance& base, const Tour& tour, std::uint64_t seed, double service_time) {
    validate_instance(base);
    validate_tour(tour, base.customer_count());
    if (!(service_time >= 0.0)) throw Error(Errc::invalid_config, "service time must be nonnegative");
    Instance inst = base;
    const std::size_t n = inst.customer_count();
    Rng rng(seed, 1);

    for (std::size_t i = 1; i <= n; ++i) {
        Node& v = inst.nodes[i];
        const double total = v.demand + v.pickup;
        v.demand = std::round(rng.uniform() * total);
        v.pickup = total - v.demand;
        v.service = service_time;
    }

    double horizon = 0.0;
    const std::size_t head = std::min<std::size_t>(n, 20);
    std::size_t at = 0;
    for (std::size_t k = 0; k < head; ++k) {
        const std::size_t id = tour.order[k];
        horizon += inst.nodes[at].service + inst.travel(at, id);
        at = id;
    }
    if (head > 0) horizon += inst.nodes[at].service + inst.travel(at, 0);
    for (std::size_t i = 1; i <= n; ++i)
        horizon = std::max(horizon, inst.travel(0, i) + inst.nodes[i].service + inst.travel(i, 0));
    horizon = std::ceil(horizon);

    const double width_lo = std::ceil(0.05 * horizon);
    const double width_hi = std::max(width_lo, std::floor(0.25 * horizon));
    for (std::size_t i = 1; i <= n; ++i) {
        Node& v = inst.nodes[i];
        const double out = inst.travel(0, i);
        const double latest_open = std::max(0.0, horizon - v.service - inst.travel(i, 0) - out);
        v.open = static_cast<double>(rng.uniform_int(0, static_cast<std::int64_t>(std::floor(latest_open))));
        const auto width = static_cast<double>(
            rng.uniform_int(static_cast<std::int64_t>(width_lo), static_cast<std::int64_t>(width_hi)));
        // measured from the earliest possible start so the singleton never warps
        v.close = std::max(v.open, out) + width;
    }
    inst.horizon = horizon;
    inst.nodes[0].close = horizon;

    auto& meta = inst.meta.generator_params;
    meta["kind"] = "spdtw";
    meta["extend_seed"] = std::to_string(seed);
    meta["service_time"] = detail::num(service_time);
    meta["demand_split"] = "d=round(u*d0), p=d0-d, u~U[0,1)";
    meta["horizon"] = "first 20 tour customers and back, raised to the longest singleton";
    meta["windows"] = "a~U{0..T-s-t_in-t_out}, b=max(a,t_out)+w, w~U{ceil(0.05T)..floor(0.25T)}";
    return inst;
}

inline Instance apply_multipliers(const Instance& base, double q_mult, double b_mult) {
    if (!(q_mult >= 1.0) || !(b_mult >= 1.0)) throw Error(Errc::invalid_config, "multipliers must be >= 1");
    Instance inst = base;
    inst.capacity *= q_mult;
    inst.horizon *= b_mult;
    for (Node& v : inst.nodes) v.close *= b_mult;
    inst.meta.generator_params["q_mult"] = detail::num(q_mult);
    inst.meta.generator_params["b_mult"] = detail::num(b_mult);
    return inst;
}

struct TriangleViolation {
    std::size_t i = 0, j = 0, k = 0; // t_ij + t_jk < t_ik
    double excess = 0.0;
};

struct TriangleReport {
    std::size_t checked = 0;
    std::size_t violation_count = 0;
    std::vector<TriangleViolation> violations; // first few only
    bool ok() const { return violation_count == 0; }
};

enum class TriangleScope { depot, full };

namespace detail {
inline void check_triple(const Instance& inst, std::size_t i, std::size_t j, std::size_t k, TriangleReport& rep) {
    ++rep.checked;
    const double direct = inst.travel(i, k);
    const double via = inst.travel(i, j) + inst.travel(j, k);
    const double slack = 1e-9 * std::max(1.0, direct);
    if (via + slack < direct) {
        ++rep.violation_count;
        if (rep.violations.size() < 32) rep.violations.push_back({i, j, k, direct - via});
    }
}
} // namespace detail

inline TriangleReport validate_triangle(const Instance& inst, TriangleScope scope = TriangleScope::depot) {
    TriangleReport rep;
    const std::size_t dim = inst.nodes.size();
    for (std::size_t a = 1; a < dim; ++a) {
        for (std::size_t b = 1; b < dim; ++b) {
            if (a == b) continue;
            detail::check_triple(inst, 0, a, b, rep);
            detail::check_triple(inst, a, b, 0, rep);
            detail::check_triple(inst, a, 0, b, rep);
        }
    }
    if (scope == TriangleScope::full) {
        for (std::size_t a = 1; a < dim; ++a)
            for (std::size_t b = 1; b < dim; ++b)
                for (std::size_t c = 1; c < dim; ++c)
                    if (a != b && b != c && a != c) detail::check_triple(inst, a, b, c, rep);
    }
    return rep;
}

// the depot triples along consecutive tour positions, which is what the
// time-window splits rely on; linear in n
inline TriangleReport validate_tour_triangle(const TourData& data) {
    TriangleReport rep;
    auto check = [&](double direct, double via, std::size_t i, std::size_t j, std::size_t k) {
        ++rep.checked;
        if (via + 1e-9 * std::max(1.0, direct) < direct) {
            ++rep.violation_count;
            if (rep.violations.size() < 32) rep.violations.push_back({i, j, k, direct - via});
        }
    };
    for (std::size_t x = 1; x < data.n; ++x) {
        check(data.time_out[x + 1], data.time_out[x] + data.step_time[x + 1], 0, x, x + 1);
        check(data.time_in[x], data.step_time[x + 1] + data.time_in[x + 1], x, x + 1, 0);
    }
    return rep;
}

// customers whose singleton route violates capacity or its time window
inline std::vector<std::size_t> infeasible_singletons(const Instance& inst) {
    std::vector<std::size_t> bad;
    for (std::size_t i = 1; i < inst.nodes.size(); ++i) {
        const Node& v = inst.nodes[i];
        const double start = std::max(inst.travel(0, i), v.open);
        const double latest = std::min(v.close, inst.horizon - v.service - inst.travel(i, 0));
        if (std::max(v.demand, v.pickup) > inst.capacity || start > latest) bad.push_back(i);
    }
    return bad;
}

struct VerifyReport {
    TriangleReport triangle;
    std::vector<std::size_t> bad_singletons;
    bool ok() const { return triangle.ok() && bad_singletons.empty(); }
};

inline VerifyReport verify_instance(const Instance& inst, TriangleScope scope = TriangleScope::depot) {
    validate_instance(inst);
    return {validate_triangle(inst, scope), infeasible_singletons(inst)};
}

} // namespace linsplit
