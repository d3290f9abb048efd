#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include <linsplit/linsplit.hpp>

namespace testing_support {

using namespace linsplit;

// Ten customers visited in label order, capacity 25. Only depot arcs and
// tour-adjacent arcs matter to a split; every other arc is set to 100.
inline Instance table2_instance() {
    const std::vector<double> out{4, 5, 10, 9, 14, 12, 16, 11, 5, 3};
    const std::vector<double> in{6, 3, 8, 11, 10, 12, 14, 14, 6, 7};
    const std::vector<double> step{4, 3, 7, 2, 7, 3, 8, 6, 8, 4};
    const std::vector<double> d{11, 3, 6, 5, 7, 8, 1, 7, 3, 7};
    Instance inst;
    inst.capacity = 25;
    inst.horizon = open_horizon;
    inst.nodes.assign(11, depot_node(open_horizon));
    Matrix m(11, 100.0);
    for (std::size_t i = 1; i <= 10; ++i) {
        m(i, i) = 0;
        m(0, i) = out[i - 1];
        m(i, 0) = in[i - 1];
        if (i > 1) m(i - 1, i) = step[i - 1];
        inst.nodes[i].demand = d[i - 1];
    }
    inst.cost_matrix = m;
    return inst;
}

inline Tour identity_tour(std::size_t n) {
    Tour t;
    for (std::size_t i = 1; i <= n; ++i) t.order.push_back(i);
    return t;
}

inline TourData table2() { return project_tour(table2_instance(), identity_tour(10)); }

// Builds a TourData straight from per-position values; arcs not on the tour
// or touching the depot are irrelevant for splits.
struct Manual {
    std::vector<double> out, in, step, d, p, a, b, s;
    double q = 1e9, t = 1e9;
};

inline TourData manual(const Manual& m) {
    const std::size_t n = m.d.size();
    Instance inst;
    inst.capacity = m.q;
    inst.horizon = m.t;
    inst.nodes.assign(n + 1, depot_node(m.t));
    Matrix c(n + 1, 1e6);
    for (std::size_t i = 1; i <= n; ++i) {
        c(i, i) = 0;
        c(0, i) = m.out[i - 1];
        c(i, 0) = m.in[i - 1];
        if (i > 1) c(i - 1, i) = m.step[i - 1];
        Node& v = inst.nodes[i];
        v.demand = m.d[i - 1];
        v.pickup = m.p.empty() ? 0.0 : m.p[i - 1];
        v.open = m.a.empty() ? 0.0 : m.a[i - 1];
        v.close = m.b.empty() ? m.t : m.b[i - 1];
        v.service = m.s.empty() ? 0.0 : m.s[i - 1];
    }
    inst.cost_matrix = c;
    return project_tour(inst, identity_tour(n));
}

struct Case {
    Instance instance;
    Tour tour;
    TourData data;
};

// Random instance with a few customers per route on average. The time-window
// variants get pickups, service times and windows.
inline Case make_case(std::uint64_t seed, std::size_t n, Variant variant) {
    Rng pick(seed, 99);
    BaseParams base;
    base.n = n;
    base.seed = seed;
    base.coord_max = 50 + pick.uniform_int(0, 150);
    base.demand_min = 1;
    base.demand_max = 30;
    static const double caps[] = {30, 45, 60, 100, 200};
    base.capacity = caps[pick.uniform_int(0, 4)];
    Generated g = generate_base(base);
    Instance inst = g.instance;
    if (variant != Variant::cvrp) {
        inst = extend_to_spdtw(inst, g.tour, seed, static_cast<double>(pick.uniform_int(0, 10)));
        static const double bm[] = {1.0, 1.5, 2.0, 4.0};
        inst = apply_multipliers(inst, 1.0, bm[pick.uniform_int(0, 3)]);
    }
    TourData data = project_tour(inst, g.tour);
    return {std::move(inst), std::move(g.tour), std::move(data)};
}

// every contiguous partition of the tour, capacity checked by summation
inline double exhaustive_cvrp(const TourData& d) {
    const std::size_t n = d.n;
    if (n == 0) return 0.0;
    double best = infinity;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (n - 1)); ++mask) {
        double total = 0.0;
        std::size_t start = 0;
        bool ok = true;
        for (std::size_t pos = 1; pos <= n && ok; ++pos) {
            if (pos < n && !((mask >> (pos - 1)) & 1)) continue;
            double load = 0.0, cost = d.cost_out[start + 1];
            for (std::size_t z = start + 1; z <= pos; ++z) {
                load += d.demand[z];
                if (z > start + 1) cost += d.step_cost[z];
            }
            ok = load <= d.capacity;
            total += cost + d.cost_in[pos];
            start = pos;
        }
        if (ok && total < best) best = total;
    }
    return best;
}

// Recomputes every tracked quantity a linear split consumes.
struct AuditChecker {
    explicit AuditChecker(const TourData& d) : data(d) {}

    const TourData& data;
    std::size_t checks = 0;
    std::size_t violations = 0;
    std::string first;

    void fail(const std::string& what) {
        if (violations++ == 0) first = what;
    }
    static std::string at(std::size_t i, std::size_t x) {
        return "(" + std::to_string(i) + "," + std::to_string(x) + "]";
    }

    void highest(std::size_t i, std::size_t x, std::size_t claimed) {
        ++checks;
        const std::size_t truth = route_load_profile(data, i, x).highest;
        if (truth != claimed)
            fail("highest" + at(i, x) + " = " + std::to_string(truth) + ", tracked " + std::to_string(claimed));
    }
    void wait(std::size_t i, std::size_t x, std::size_t claimed) {
        ++checks;
        const std::size_t truth = route_wait(data, i, x);
        if (truth != claimed)
            fail("wait" + at(i, x) + " = " + std::to_string(truth) + ", tracked " + std::to_string(claimed));
    }
    void first_warp(std::size_t i, std::size_t x, double r) {
        ++checks;
        const Schedule s = route_schedule(data, i, x, ScheduleMode::warp);
        const bool ok = r > 0.0 ? (s.first_warp == x && s.first_warp_amount == r) : s.total_warp == 0.0;
        if (!ok) fail("first warp" + at(i, x) + " tracked r = " + std::to_string(r));
    }
    void warp(std::size_t i, std::size_t x, double claimed) {
        ++checks;
        const double truth = route_schedule(data, i, x, ScheduleMode::warp).total_warp;
        if (!costs_agree(truth, claimed))
            fail("warp" + at(i, x) + " = " + std::to_string(truth) + ", tracked " + std::to_string(claimed));
    }
};

inline const std::vector<std::size_t>& fib_sizes() {
    static const std::vector<std::size_t> sizes{1, 2, 3, 5, 8, 13, 21, 34, 55, 89, 144};
    return sizes;
}

} // namespace testing_support
