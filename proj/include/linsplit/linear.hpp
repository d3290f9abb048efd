#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <vector>

#include "cursor_deque.hpp"
#include "dominance.hpp"
#include "model.hpp"

// Queue-based linear splits. Every run reports deque pushes, pops and
// cursor advances in SplitResult::counters.
//
// The Audit parameter receives every tracked quantity at the moment it is
// consumed so tests can compare it with a direct evaluation; NoAudit
// compiles away.

namespace linsplit {

struct NoAudit {
    void highest(std::size_t /*i*/, std::size_t /*x*/, std::size_t /*claimed*/) {}
    void wait(std::size_t /*i*/, std::size_t /*x*/, std::size_t /*claimed*/) {}
    // route (i,x] has not warped before x and warps max(r, 0) at x
    void first_warp(std::size_t /*i*/, std::size_t /*x*/, double /*r*/) {}
    void warp(std::size_t /*i*/, std::size_t /*x*/, double /*claimed_total*/) {}
};

namespace detail {
inline void settle(SplitResult& r, std::size_t x, std::size_t i, double value) {
    r.pot[x] = value;
    r.pred[x] = i;
}

template <class... Q>
OpCounters sum_counters(const Q&... queues) {
    OpCounters total;
    ((total += queues.counters()), ...);
    return total;
}

[[noreturn]] inline void no_predecessor(std::size_t x) {
    throw Error(Errc::no_feasible_split, "no admissible route ends at position " + std::to_string(x));
}
} // namespace detail

template <class IsArc>
SplitResult generalized_split(const TourData& data, IsArc&& is_arc) {
    const std::size_t n = data.n;
    SplitResult r = empty_result(n);
    IndexDeque queue(n + 1);
    for (std::size_t x = 1; x <= n; ++x) {
        // the skeleton relies on every singleton being an arc
        if (!is_arc(x - 1, x)) detail::no_predecessor(x);
        while (queue.not_empty() && !dominates(r.pot, data, queue.back(), x - 1)) queue.remove_back();
        queue.insert_back(x - 1);
        while (queue.not_empty() && !is_arc(queue.front(), x)) queue.remove_front();
        if (queue.empty()) detail::no_predecessor(x);
        const std::size_t i = queue.front();
        detail::settle(r, x, i, r.pot[i] + prefix_route_cost(data, i, x));
    }
    r.counters = queue.counters();
    finish(r, n);
    return r;
}

inline SplitResult linear_cvrp(const TourData& data) {
    const std::size_t n = data.n;
    SplitResult r = empty_result(n);
    IndexDeque queue(n + 1);
    for (std::size_t x = 1; x <= n; ++x) {
        while (queue.not_empty() && !dominates(r.pot, data, queue.back(), x - 1)) queue.remove_back();
        queue.insert_back(x - 1);
        while (queue.not_empty() && infeasible_d(data, queue.front(), x)) queue.remove_front();
        if (queue.empty()) detail::no_predecessor(x);
        const std::size_t i = queue.front();
        detail::settle(r, x, i, r.pot[i] + prefix_route_cost(data, i, x));
    }
    r.counters = queue.counters();
    finish(r, n);
    return r;
}

template <class Audit>
SplitResult linear_vrpspdtw(const TourData& data, Audit& audit) {
    const std::size_t n = data.n;
    SplitResult r = empty_result(n);
    IndexDeque lam(n + 1);   // predecessors
    IndexDeque lam_h(n + 1); // highest-load candidates
    IndexDeque lam_a(n + 1); // waiting candidates
    lam_h.insert_back(0);

    for (std::size_t x = 1; x <= n; ++x) {
        while (lam.not_empty() && !dominates(r.pot, data, lam.back(), x - 1)) lam.remove_back();
        lam.insert_back(x - 1);
        while (lam_h.not_empty() && !dominates_h(data, lam_h.back(), x)) lam_h.remove_back();
        lam_h.insert_back(x);
        while (lam_a.not_empty() && !dominates_a(data, lam_a.back(), x)) lam_a.remove_back();
        lam_a.insert_back(x);

        // a depot copy can be the highest point, but never a waiting customer
        auto sync = [&] {
            while (lam_h.front() < lam.front()) lam_h.remove_front();
            while (lam_a.front() <= lam.front()) lam_a.remove_front();
        };
        sync();
        for (;;) {
            const std::size_t i = lam.front();
            audit.highest(i, x, lam_h.front());
            audit.wait(i, x, lam_a.front());
            if (!infeasible_h(data, i, lam_h.front(), x) && !infeasible_a(data, i, lam_a.front(), x)) break;
            lam.remove_front();
            if (lam.empty()) detail::no_predecessor(x);
            sync();
        }
        const std::size_t i = lam.front();
        detail::settle(r, x, i, r.pot[i] + prefix_route_cost(data, i, x));
    }
    r.counters = detail::sum_counters(lam, lam_h, lam_a);
    finish(r, n);
    return r;
}

inline SplitResult linear_vrpspdtw(const TourData& data) {
    NoAudit audit;
    return linear_vrpspdtw(data, audit);
}

template <class Audit>
SplitResult linear_soft_vrpspd(const TourData& data, const PenaltyParams& params, Audit& audit) {
    validate_params(params);
    const std::size_t n = data.n;
    SplitResult r = empty_result(n);
    const auto& pot = r.pot;
    CursorDeque lam(n + 1);
    IndexDeque lam_h(n + 1); // tracks highest(lam.next, x)
    std::vector<std::size_t> h(n + 1);
    std::iota(h.begin(), h.end(), std::size_t{0});
    lam_h.insert_back(0);

    for (std::size_t x = 1; x <= n; ++x) {
        auto pen = [&](std::size_t i, std::size_t hi) {
            audit.highest(i, x, hi);
            return capacity_penalty(data, params, i, hi, x);
        };
        auto beats = [&](std::size_t i, std::size_t hi, std::size_t k, std::size_t hk) {
            audit.highest(i, x, hi);
            audit.highest(k, x, hk);
            return dominates_alpha(pot, data, params, i, hi, k, hk, x);
        };
        auto prune_prev = [&] {
            while (lam.has_prev() && !dominates_alpha_p(pot, data, params, lam.prev(), lam.best())) lam.remove_prev();
        };
        auto sync_next = [&] {
            if (lam.has_next())
                while (lam_h.front() < lam.next()) lam_h.remove_front();
        };

        while (lam.not_empty() && !dominates(pot, data, lam.back(), x - 1)) {
            if (lam.best() == lam.back()) lam.set_best(npos);
            lam.remove_back();
        }
        lam.insert_back(x - 1);
        if (lam.best() == npos) {
            lam.set_best(lam.back());
            prune_prev();
        }
        while (lam_h.not_empty() && !dominates_h(data, lam_h.back(), x)) lam_h.remove_back();
        lam_h.insert_back(x);

        if (!dominates_h(data, h[lam.best()], x)) {
            h[lam.best()] = x;
            while (lam.has_prev() && !dominates_h(data, h[lam.prev()], x)) {
                h[lam.prev()] = x;
                lam.move_prev();
                lam.remove_next();
            }
            if (lam.has_prev() && beats(lam.prev(), h[lam.prev()], lam.best(), h[lam.best()])) {
                lam.move_prev();
                lam.remove_next();
            }
        }
        sync_next();
        while (lam.has_next() && pen(lam.next(), lam_h.front()) > 0.0) {
            if (beats(lam.best(), h[lam.best()], lam.next(), lam_h.front())) {
                lam.remove_next();
            } else {
                h[lam.next()] = lam_h.front();
                lam.move_next();
                prune_prev();
            }
            sync_next();
        }
        if (lam.has_next() && !beats(lam.best(), h[lam.best()], lam.next(), lam_h.front())) {
            h[lam.next()] = lam_h.front();
            lam.move_next();
            prune_prev();
        }

        const std::size_t b = lam.best();
        detail::settle(r, x, b, pot[b] + (prefix_route_cost(data, b, x) + pen(b, h[b])));
    }
    r.counters = detail::sum_counters(lam, lam_h);
    finish(r, n);
    return r;
}

inline SplitResult linear_soft_vrpspd(const TourData& data, const PenaltyParams& params) {
    NoAudit audit;
    return linear_soft_vrpspd(data, params, audit);
}

// Soft time windows assume every singleton route is penalty free.
inline void require_clean_singletons(const TourData& data) {
    for (std::size_t x = 1; x <= data.n; ++x) {
        if (data.demand[x] > data.capacity)
            throw Error(Errc::invalid_instance, "singleton route " + std::to_string(x) + " exceeds capacity");
        if (std::max(data.time_out[x], data.open[x]) > data.latest(x))
            throw Error(Errc::invalid_instance, "singleton route " + std::to_string(x) + " warps");
    }
}

template <class Audit>
SplitResult linear_soft_vrptw(const TourData& data, const PenaltyParams& params, Audit& audit) {
    validate_params(params);
    require_clean_singletons(data);
    const std::size_t n = data.n;
    SplitResult r = empty_result(n);
    const auto& pot = r.pot;
    CursorDeque lam(n + 1);
    IndexDeque lam_a(n + 1); // waiting candidates for lam.no_warp
    WarpState warp(n);
    using C = CursorDeque::Cursor;

    for (std::size_t x = 1; x <= n; ++x) {
        auto pen_d = [&](std::size_t i) { return demand_penalty(data, params, i, x); };
        auto pen_w = [&](std::size_t i) {
            const double total = route_warp(data, warp, i, x);
            audit.warp(i, x, total);
            return params.beta * total;
        };
        auto beats = [&](std::size_t i, std::size_t j) {
            audit.warp(i, x, route_warp(data, warp, i, x));
            audit.warp(j, x, route_warp(data, warp, j, x));
            return dominates_alpha_d_beta_a(pot, data, params, warp, i, j, x);
        };
        auto prune_feas_prev = [&] {
            while (lam.feas_has_prev() && !beats(lam.feas_prev(), lam.feas())) {
                if (lam.no_warp() == lam.feas_prev()) lam.set_no_warp(lam.feas());
                lam.remove_feas_prev();
            }
        };
        // Removing at the front must not strand a cursor. Everything behind a
        // removed cursor element is newer, so the cursor hands over to it.
        auto handover = [&](std::size_t gone, std::size_t successor) {
            if (lam.feas() == gone) lam.set_feas(successor);
            if (lam.no_warp() == gone) lam.set_no_warp(successor);
        };
        auto drop_front = [&] {
            handover(lam.front(), lam.front2());
            lam.remove_front();
        };
        auto drop_front2 = [&] {
            handover(lam.front2(), lam.after(lam.front2()));
            lam.remove_front2();
        };
        auto update_r = [&] {
            const std::size_t i = lam.no_warp();
            while (lam_a.front() <= i) lam_a.remove_front();
            audit.wait(i, x, lam_a.front());
            warp.r[i] = std::max(0.0, initial_warp(data, i, lam_a.front(), x));
            audit.first_warp(i, x, warp.r[i]);
        };

        while (lam.not_empty() && !dominates(pot, data, lam.back(), x - 1)) {
            if (lam.feas() == lam.back()) lam.clear(C::feas_cursor);
            if (lam.no_warp() == lam.back()) lam.clear(C::no_warp_cursor);
            lam.remove_back();
        }
        lam.insert_back(x - 1);
        if (lam.feas() == npos) lam.set_feas(lam.back());
        if (lam.no_warp() == npos) lam.set_no_warp(lam.back());

        while (lam_a.not_empty() && !dominates_a(data, lam_a.back(), x)) lam_a.remove_back();
        lam_a.insert_back(x);

        update_r();
        while (warp.r[lam.no_warp()] > 0.0) {
            warp.q[lam.no_warp()] = x;
            lam.move_no_warp_next();
            update_r();
        }

        while (pen_d(lam.feas()) > 0.0 || pen_w(lam.feas()) > 0.0) {
            prune_feas_prev();
            lam.move_feas_next();
        }
        prune_feas_prev();

        while (lam.size() > 1 && pen_d(lam.front2()) > 0.0 && pen_w(lam.front2()) > 0.0) {
            if (beats(lam.front(), lam.front2()))
                drop_front2();
            else
                drop_front();
        }
        if (lam.size() > 1 && !beats(lam.front(), lam.front2())) drop_front();

        const std::size_t f = lam.front();
        detail::settle(r, x, f, pot[f] + (prefix_route_cost(data, f, x) + pen_d(f) + pen_w(f)));
    }
    r.counters = detail::sum_counters(lam, lam_a);
    finish(r, n);
    return r;
}

inline SplitResult linear_soft_vrptw(const TourData& data, const PenaltyParams& params) {
    NoAudit audit;
    return linear_soft_vrptw(data, params, audit);
}

} // namespace linsplit
