#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "error.hpp"

namespace linsplit {

inline constexpr double infinity = std::numeric_limits<double>::infinity();
inline constexpr std::size_t npos = static_cast<std::size_t>(-1);

struct Point {
    double x = 0.0;
    double y = 0.0;
    bool operator==(const Point&) const = default;
};

struct Node {
    double demand = 0.0;
    double pickup = 0.0;
    double open = 0.0;
    double close = 0.0;
    double service = 0.0;
    bool operator==(const Node&) const = default;
};

class Matrix {
public:
    Matrix() = default;
    explicit Matrix(std::size_t dim, double fill = 0.0) : dim_(dim), values_(dim * dim, fill) {}

    std::size_t dim() const { return dim_; }
    double operator()(std::size_t i, std::size_t j) const { return values_[i * dim_ + j]; }
    double& operator()(std::size_t i, std::size_t j) { return values_[i * dim_ + j]; }

    bool operator==(const Matrix&) const = default;

private:
    std::size_t dim_ = 0;
    std::vector<double> values_;
};

// ceil keeps integer distances metric: ceil(a) + ceil(b) >= a + b >= c
// and an integer >= c is >= ceil(c).
enum class Rounding { ceil, none };

inline double euclidean(const Point& a, const Point& b, Rounding mode) {
    const double dx = a.x - b.x;
    const double dy = a.y - b.y;
    const double dist = std::sqrt(dx * dx + dy * dy);
    return mode == Rounding::ceil ? std::ceil(dist) : dist;
}

struct InstanceMeta {
    std::optional<std::uint64_t> seed;
    std::map<std::string, std::string> generator_params;
    bool operator==(const InstanceMeta&) const = default;
};

// nodes[0] is the depot. Arcs come either from coords (c = t = distance)
// or from explicit matrices; a missing time matrix copies the cost matrix.
struct Instance {
    std::vector<Node> nodes;
    double capacity = 0.0;
    double horizon = 0.0;
    std::vector<Point> coords;
    Rounding rounding = Rounding::ceil;
    std::optional<Matrix> cost_matrix;
    std::optional<Matrix> time_matrix;
    InstanceMeta meta;

    std::size_t customer_count() const { return nodes.empty() ? 0 : nodes.size() - 1; }

    double cost(std::size_t i, std::size_t j) const {
        if (cost_matrix) return (*cost_matrix)(i, j);
        return euclidean(coords[i], coords[j], rounding);
    }

    double travel(std::size_t i, std::size_t j) const {
        if (time_matrix) return (*time_matrix)(i, j);
        return cost(i, j);
    }

    bool operator==(const Instance&) const = default;
};

inline Node depot_node(double horizon) {
    Node depot;
    depot.close = horizon;
    return depot;
}

namespace detail {
inline bool nonneg(double v) { return !std::isnan(v) && v >= 0.0; }

inline void require(bool ok, const std::string& what) {
    if (!ok) throw Error(Errc::invalid_instance, what);
}
} // namespace detail

inline void validate_instance(const Instance& inst) {
    using detail::nonneg;
    using detail::require;
    require(!inst.nodes.empty(), "instance has no depot");
    require(nonneg(inst.capacity), "capacity must be nonnegative");
    require(nonneg(inst.horizon), "horizon must be nonnegative");
    const std::size_t dim = inst.nodes.size();
    for (std::size_t i = 0; i < dim; ++i) {
        const Node& v = inst.nodes[i];
        // messages only built on failure; this runs once per node
        if (!(nonneg(v.demand) && nonneg(v.pickup) && nonneg(v.open) && nonneg(v.close) && nonneg(v.service)))
            require(false, "negative value at node " + std::to_string(i));
        if (!(v.open <= v.close)) require(false, "open > close at node " + std::to_string(i));
    }
    const Node& depot = inst.nodes[0];
    require(depot.demand == 0.0 && depot.pickup == 0.0 && depot.service == 0.0 && depot.open == 0.0,
            "depot must have zero demand, pickup, service and opening time");
    if (inst.cost_matrix) {
        require(inst.cost_matrix->dim() == dim, "cost matrix dimension mismatch");
        if (inst.time_matrix) require(inst.time_matrix->dim() == dim, "time matrix dimension mismatch");
        for (std::size_t i = 0; i < dim; ++i)
            for (std::size_t j = 0; j < dim; ++j)
                if (!(nonneg(inst.cost(i, j)) && nonneg(inst.travel(i, j))))
                    require(false, "negative arc " + std::to_string(i) + "->" + std::to_string(j));
    } else {
        require(!inst.time_matrix, "time matrix given without cost matrix");
        require(inst.coords.size() == dim, "need coordinates for every node or a cost matrix");
        for (const Point& p : inst.coords)
            require(std::isfinite(p.x) && std::isfinite(p.y), "non-finite coordinate");
    }
}

struct Tour {
    std::vector<std::size_t> order;
    bool operator==(const Tour&) const = default;
};

inline void validate_tour(const Tour& tour, std::size_t n) {
    if (tour.order.size() != n)
        throw Error(Errc::invalid_tour, "tour has " + std::to_string(tour.order.size()) +
                                            " entries, expected " + std::to_string(n));
    std::vector<char> seen(n + 1, 0);
    for (std::size_t v : tour.order) {
        if (v == 0 || v > n) throw Error(Errc::invalid_tour, "customer " + std::to_string(v) + " out of range");
        if (seen[v]) throw Error(Errc::invalid_tour, "customer " + std::to_string(v) + " repeated");
        seen[v] = 1;
    }
}

struct PenaltyParams {
    double alpha = 0.0;
    double beta = 0.0;
};

inline void validate_params(const PenaltyParams& params) {
    if (!detail::nonneg(params.alpha) || !detail::nonneg(params.beta))
        throw Error(Errc::invalid_config, "penalty factors must be nonnegative");
}

// Everything below is indexed by tour position; position 0 is the depot.
// step_cost[i] = c_{i-1,i} and step_time[i] = t_{i-1,i} for i >= 1.
// C, D, P, S, W are the cost, delivery, pickup, time and warp prefix sums.
struct TourData {
    std::size_t n = 0;
    double capacity = 0.0;
    double horizon = 0.0;
    std::vector<std::size_t> label;
    std::vector<double> cost_out, cost_in, time_out, time_in;
    std::vector<double> open, close, service, demand, pickup;
    std::vector<double> step_cost, step_time;
    std::vector<double> C, D, P, S, W;
    std::vector<double> limit; // latest feasible service start, filled by project_tour

    double latest(std::size_t i) const { return limit[i]; }

    bool operator==(const TourData&) const = default;
};

inline std::vector<double> compute_warp_prefix(const TourData& data) {
    std::vector<double> W(data.n + 1, 0.0);
    double duration = 0.0;
    for (std::size_t i = 1; i <= data.n; ++i) {
        duration = std::max(duration + data.service[i - 1] + data.step_time[i], data.open[i]);
        const double limit = data.latest(i);
        if (duration > limit) {
            W[i] = W[i - 1] + duration - limit;
            duration = limit;
        } else {
            W[i] = W[i - 1];
        }
    }
    return W;
}

inline TourData project_tour(const Instance& inst, const Tour& tour) {
    validate_instance(inst);
    const std::size_t n = inst.customer_count();
    validate_tour(tour, n);

    TourData data;
    data.n = n;
    data.capacity = inst.capacity;
    data.horizon = inst.horizon;
    data.label.assign(n + 1, 0);
    for (auto* v : {&data.cost_out, &data.cost_in, &data.time_out, &data.time_in, &data.open, &data.close,
                    &data.service, &data.demand, &data.pickup, &data.step_cost, &data.step_time, &data.C,
                    &data.D, &data.P, &data.S})
        v->assign(n + 1, 0.0);
    data.close[0] = inst.horizon;

    for (std::size_t pos = 1; pos <= n; ++pos) {
        const std::size_t id = tour.order[pos - 1];
        const std::size_t prev = data.label[pos - 1];
        const Node& v = inst.nodes[id];
        data.label[pos] = id;
        data.cost_out[pos] = inst.cost(0, id);
        data.cost_in[pos] = inst.cost(id, 0);
        data.time_out[pos] = inst.travel(0, id);
        data.time_in[pos] = inst.travel(id, 0);
        data.open[pos] = v.open;
        data.close[pos] = v.close;
        data.service[pos] = v.service;
        data.demand[pos] = v.demand;
        data.pickup[pos] = v.pickup;
        data.step_cost[pos] = inst.cost(prev, id);
        data.step_time[pos] = inst.travel(prev, id);

        data.C[pos] = data.C[pos - 1] + data.step_cost[pos];
        data.D[pos] = data.D[pos - 1] + v.demand;
        data.P[pos] = data.P[pos - 1] + v.pickup;
        data.S[pos] = data.S[pos - 1] + data.service[pos - 1] + data.step_time[pos];
    }
    data.limit.assign(n + 1, 0.0);
    for (std::size_t pos = 0; pos <= n; ++pos)
        data.limit[pos] = std::min(data.close[pos], data.horizon - data.service[pos] - data.time_in[pos]);
    data.W = compute_warp_prefix(data);
    return data;
}

// prefix-sum form of the cost of route (0, i+1, ..., j, 0)
inline double prefix_route_cost(const TourData& data, std::size_t i, std::size_t j) {
    return data.cost_out[i + 1] + data.C[j] - data.C[i + 1] + data.cost_in[j];
}

struct OpCounters {
    std::size_t pushes = 0;
    std::size_t pops = 0;
    // cursor advances toward the back; a step toward the front always
    // removes the element it leaves and is accounted for in pops
    std::size_t cursor_moves = 0;

    std::size_t total() const { return pushes + pops + cursor_moves; }
    OpCounters& operator+=(const OpCounters& o) {
        pushes += o.pushes;
        pops += o.pops;
        cursor_moves += o.cursor_moves;
        return *this;
    }
    bool operator==(const OpCounters&) const = default;
};

// route (from, to] serves tour positions from+1 .. to
struct Route {
    std::size_t from = 0;
    std::size_t to = 0;
    bool operator==(const Route&) const = default;
};

struct SplitResult {
    std::vector<std::size_t> pred; // pred[0] unused
    std::vector<double> pot;
    std::vector<Route> routes;
    double total_cost = 0.0;
    OpCounters counters;
};

inline std::vector<Route> reconstruct_routes(const std::vector<std::size_t>& pred, std::size_t n) {
    if (n > 0 && pred.size() < n + 1)
        throw Error(Errc::corrupt_result, "predecessor array too short");
    std::vector<Route> routes;
    std::size_t j = n;
    while (j > 0) {
        const std::size_t i = pred[j];
        if (i >= j)
            throw Error(Errc::corrupt_result,
                        "pred[" + std::to_string(j) + "] = " + std::to_string(i) + " does not decrease");
        routes.push_back({i, j});
        j = i;
    }
    std::reverse(routes.begin(), routes.end());
    return routes;
}

inline SplitResult empty_result(std::size_t n) {
    SplitResult r;
    r.pred.assign(n + 1, 0);
    r.pot.assign(n + 1, infinity);
    r.pot[0] = 0.0;
    return r;
}

inline void finish(SplitResult& r, std::size_t n) {
    if (!(r.pot[n] < infinity)) throw Error(Errc::no_feasible_split, "no feasible partition of the tour");
    r.total_cost = r.pot[n];
    r.routes = reconstruct_routes(r.pred, n);
}

} // namespace linsplit
