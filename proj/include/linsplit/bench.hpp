#pragma once

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <future>
#include <map>
#include <numeric>
#include <string>
#include <tuple>
#include <vector>

#include "instgen.hpp"
#include "split.hpp"

namespace linsplit {

struct BenchCell {
    double q_mult = 1.0;
    double b_mult = 1.0;
    bool operator==(const BenchCell&) const = default;
};

// the Q / closing-window pairs of the experiment grid, base capacity 100
inline std::vector<BenchCell> default_grid() {
    std::vector<BenchCell> cells;
    for (double m : {1.0, 2.0, 5.0, 10.0, 20.0, 50.0, 100.0, 200.0, 500.0, 1000.0}) cells.push_back({m, 10.0 * m});
    return cells;
}

struct BenchConfig {
    std::vector<std::size_t> sizes{100};
    std::vector<BenchCell> cells{{1.0, 10.0}};
    std::vector<Variant> variants{Variant::hard_spdtw, Variant::soft_spd, Variant::soft_tw};
    std::size_t warmups = 3;
    std::size_t reps = 10;
    std::uint64_t seed = 1;
    PenaltyParams params{1.0, 1.0};
    double service_time = 10.0;
    double base_capacity = 100.0;
    bool parallel = false;
};

struct BenchRow {
    std::string instance;
    std::size_t n = 0;
    Variant variant = Variant::cvrp;
    Algorithm algorithm = Algorithm::bellman;
    double q_mult = 1.0;
    double b_mult = 1.0;
    double alpha = 0.0;
    double beta = 0.0;
    std::size_t reps = 0;
    double mean_ms = 0.0;
    double median_ms = 0.0;
    double stddev_ms = 0.0;
    double min_ms = 0.0;
    double cost = 0.0;
    OpCounters counters;
};

struct BenchReport {
    std::vector<BenchRow> rows;
};

struct TimingStats {
    double mean = 0.0, median = 0.0, stddev = 0.0, min = 0.0;
};

inline TimingStats summarize(std::vector<double> samples) {
    TimingStats s;
    if (samples.empty()) return s;
    std::sort(samples.begin(), samples.end());
    const std::size_t m = samples.size();
    s.min = samples.front();
    s.median = m % 2 ? samples[m / 2] : 0.5 * (samples[m / 2 - 1] + samples[m / 2]);
    s.mean = std::accumulate(samples.begin(), samples.end(), 0.0) / static_cast<double>(m);
    double sq = 0.0;
    for (double v : samples) sq += (v - s.mean) * (v - s.mean);
    s.stddev = m > 1 ? std::sqrt(sq / static_cast<double>(m - 1)) : 0.0;
    return s;
}

// instance used for one (size, cell, variant) point of the grid
inline Generated bench_instance(const BenchConfig& cfg, std::size_t n, const BenchCell& cell, Variant variant) {
    BaseParams base;
    base.n = n;
    base.seed = cfg.seed + n;
    base.capacity = cfg.base_capacity;
    Generated g = generate_base(base);
    if (variant != Variant::cvrp) g.instance = extend_to_spdtw(g.instance, g.tour, base.seed, cfg.service_time);
    g.instance = apply_multipliers(g.instance, cell.q_mult, cell.b_mult);
    return g;
}

inline std::string bench_instance_name(std::uint64_t seed, std::size_t n) {
    return "gen-n" + std::to_string(n) + "-s" + std::to_string(seed + n);
}

namespace detail {

inline std::vector<BenchRow> bench_cell(const BenchConfig& cfg, std::size_t n, const BenchCell& cell, Variant variant) {
    const Generated g = bench_instance(cfg, n, cell, variant);
    if (!infeasible_singletons(g.instance).empty())
        throw Error(Errc::invalid_instance, "generated instance has an infeasible singleton route");
    const TourData data = project_tour(g.instance, g.tour);
    if (!validate_tour_triangle(data).ok())
        throw Error(Errc::invalid_instance, "generated instance violates the triangle inequality");

    std::vector<BenchRow> rows;
    std::vector<SplitResult> results;
    for (Algorithm algo : {Algorithm::bellman, Algorithm::linear}) {
        for (std::size_t w = 0; w < cfg.warmups; ++w) (void)run_split(data, variant, algo, cfg.params);
        std::vector<double> samples;
        SplitResult last;
        for (std::size_t rep = 0; rep < std::max<std::size_t>(cfg.reps, 1); ++rep) {
            const auto t0 = std::chrono::steady_clock::now();
            last = run_split(data, variant, algo, cfg.params);
            const auto t1 = std::chrono::steady_clock::now();
            samples.push_back(std::chrono::duration<double, std::milli>(t1 - t0).count());
        }
        const TimingStats st = summarize(samples);
        BenchRow row;
        row.instance = bench_instance_name(cfg.seed, n);
        row.n = n;
        row.variant = variant;
        row.algorithm = algo;
        row.q_mult = cell.q_mult;
        row.b_mult = cell.b_mult;
        row.alpha = is_soft(variant) ? cfg.params.alpha : 0.0;
        row.beta = variant == Variant::soft_tw ? cfg.params.beta : 0.0;
        row.reps = samples.size();
        row.mean_ms = st.mean;
        row.median_ms = st.median;
        row.stddev_ms = st.stddev;
        row.min_ms = st.min;
        row.cost = last.total_cost;
        row.counters = last.counters;
        rows.push_back(row);
        results.push_back(std::move(last));
    }
    if (!costs_agree(results[0].total_cost, results[1].total_cost))
        throw Error(Errc::mismatch, std::string(to_string(variant)) + " n=" + std::to_string(n) +
                                        ": bellman cost " + detail::num(results[0].total_cost) + " != linear cost " +
                                        detail::num(results[1].total_cost));
    if (results[1].counters.total() > op_bound(variant, n))
        throw Error(Errc::mismatch, std::string(to_string(variant)) + " n=" + std::to_string(n) +
                                        ": linear split exceeded its operation bound");
    return rows;
}

} // namespace detail

inline BenchReport run_benchmark(const BenchConfig& cfg) {
    if (cfg.sizes.empty() || cfg.cells.empty() || cfg.variants.empty())
        throw Error(Errc::invalid_config, "benchmark needs at least one size, cell and variant");
    validate_params(cfg.params);

    struct Job {
        std::size_t n;
        BenchCell cell;
        Variant variant;
    };
    std::vector<Job> jobs;
    for (const BenchCell& cell : cfg.cells)
        for (std::size_t n : cfg.sizes)
            for (Variant v : cfg.variants) jobs.push_back({n, cell, v});

    BenchReport report;
    if (!cfg.parallel) {
        for (const Job& job : jobs) {
            auto rows = detail::bench_cell(cfg, job.n, job.cell, job.variant);
            report.rows.insert(report.rows.end(), rows.begin(), rows.end());
        }
        return report;
    }
    // cells run concurrently; timings inside a cell stay sequential
    std::vector<std::future<std::vector<BenchRow>>> pending;
    for (const BenchCell& cell : cfg.cells) {
        pending.push_back(std::async(std::launch::async, [&cfg, cell, &jobs] {
            std::vector<BenchRow> rows;
            for (const Job& job : jobs) {
                if (!(job.cell == cell)) continue;
                auto part = detail::bench_cell(cfg, job.n, job.cell, job.variant);
                rows.insert(rows.end(), part.begin(), part.end());
            }
            return rows;
        }));
    }
    for (auto& f : pending) {
        auto rows = f.get();
        report.rows.insert(report.rows.end(), rows.begin(), rows.end());
    }
    return report;
}

// least-squares slope of log(time) against log(n)
inline double loglog_slope(const std::vector<double>& ns, const std::vector<double>& times) {
    if (ns.size() != times.size() || ns.size() < 2) throw Error(Errc::invalid_config, "need matching samples");
    const double m = static_cast<double>(ns.size());
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    for (std::size_t k = 0; k < ns.size(); ++k) {
        const double x = std::log(ns[k]);
        const double y = std::log(times[k]);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    const double denom = m * sxx - sx * sx;
    if (denom == 0.0) throw Error(Errc::invalid_config, "sizes must differ");
    return (m * sxy - sx * sy) / denom;
}

struct ScalingFit {
    Variant variant = Variant::cvrp;
    Algorithm algorithm = Algorithm::bellman;
    BenchCell cell;
    std::size_t sizes = 0;
    double slope = 0.0;
};

// one fit per (variant, algorithm, cell) using median times
inline std::vector<ScalingFit> estimate_scaling(const BenchReport& report, std::size_t min_sizes = 4) {
    using Key = std::tuple<int, int, double, double>;
    std::map<Key, std::map<std::size_t, double>> groups;
    for (const BenchRow& row : report.rows)
        groups[{static_cast<int>(row.variant), static_cast<int>(row.algorithm), row.q_mult, row.b_mult}][row.n] =
            row.median_ms;
    std::vector<ScalingFit> fits;
    for (const auto& [key, series] : groups) {
        if (series.size() < min_sizes)
            throw Error(Errc::invalid_config, "scaling fit needs at least " + std::to_string(min_sizes) + " sizes");
        std::vector<double> ns, ts;
        for (const auto& [n, t] : series) {
            ns.push_back(static_cast<double>(n));
            ts.push_back(std::max(t, 1e-9));
        }
        ScalingFit fit;
        fit.variant = static_cast<Variant>(std::get<0>(key));
        fit.algorithm = static_cast<Algorithm>(std::get<1>(key));
        fit.cell = {std::get<2>(key), std::get<3>(key)};
        fit.sizes = series.size();
        fit.slope = loglog_slope(ns, ts);
        fits.push_back(fit);
    }
    return fits;
}

struct SpeedupPoint {
    std::size_t n = 0;
    Variant variant = Variant::cvrp;
    double q_mult = 1.0, b_mult = 1.0, alpha = 0.0, beta = 0.0;
    double bellman_ms = 0.0, linear_ms = 0.0, speedup = 0.0;
};

// bellman mean over linear mean for every (instance, variant, cell)
inline std::vector<SpeedupPoint> speedup_series(const BenchReport& report) {
    using Key = std::tuple<std::string, std::size_t, int, double, double, double, double>;
    std::map<Key, std::pair<const BenchRow*, const BenchRow*>> pairs;
    for (const BenchRow& row : report.rows) {
        auto& slot = pairs[{row.instance, row.n, static_cast<int>(row.variant), row.q_mult, row.b_mult, row.alpha,
                            row.beta}];
        if (row.algorithm == Algorithm::bellman) slot.first = &row;
        if (row.algorithm == Algorithm::linear) slot.second = &row;
    }
    std::vector<SpeedupPoint> out;
    for (const auto& [key, rows] : pairs) {
        if (!rows.first || !rows.second) continue;
        SpeedupPoint p;
        p.n = rows.first->n;
        p.variant = rows.first->variant;
        p.q_mult = rows.first->q_mult;
        p.b_mult = rows.first->b_mult;
        p.alpha = rows.first->alpha;
        p.beta = rows.first->beta;
        p.bellman_ms = rows.first->mean_ms;
        p.linear_ms = rows.second->mean_ms;
        p.speedup = p.linear_ms > 0.0 ? p.bellman_ms / p.linear_ms : 0.0;
        out.push_back(p);
    }
    std::sort(out.begin(), out.end(), [](const SpeedupPoint& a, const SpeedupPoint& b) {
        return std::tie(a.variant, a.q_mult, a.b_mult, a.n) < std::tie(b.variant, b.q_mult, b.b_mult, b.n);
    });
    return out;
}

} // namespace linsplit
