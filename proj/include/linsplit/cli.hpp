#pragma once

#include <cstddef>
#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "bench.hpp"
#include "instgen.hpp"
#include "io.hpp"
#include "split.hpp"

namespace linsplit {

enum ExitCode : int {
    exit_ok = 0,
    exit_usage = 1,
    exit_parse = 2,
    exit_validation = 3,
    exit_mismatch = 4,
    exit_no_split = 5,
};

inline int exit_code_for(Errc code) {
    switch (code) {
    case Errc::parse: return exit_parse;
    case Errc::invalid_config:
    case Errc::oracle_cap: return exit_usage;
    case Errc::mismatch:
    case Errc::contract_violation: return exit_mismatch;
    case Errc::no_feasible_split: return exit_no_split;
    default: return exit_validation;
    }
}

namespace detail {

inline std::vector<BenchCell> parse_cells(const std::vector<std::string>& specs) {
    std::vector<BenchCell> cells;
    for (const std::string& spec : specs) {
        if (spec == "grid") {
            auto grid = default_grid();
            cells.insert(cells.end(), grid.begin(), grid.end());
            continue;
        }
        const auto colon = spec.find(':');
        if (colon == std::string::npos)
            throw Error(Errc::invalid_config, "cell '" + spec + "' must look like q_mult:b_mult");
        BenchCell cell;
        try {
            std::size_t used = 0;
            cell.q_mult = std::stod(spec.substr(0, colon), &used);
            if (used != colon) throw std::invalid_argument(spec);
            const std::string rest = spec.substr(colon + 1);
            cell.b_mult = std::stod(rest, &used);
            if (used != rest.size()) throw std::invalid_argument(spec);
        } catch (const std::logic_error&) {
            throw Error(Errc::invalid_config, "cell '" + spec + "' must look like q_mult:b_mult");
        }
        cells.push_back(cell);
    }
    return cells;
}

inline Variant variant_or_throw(const std::string& name) {
    auto v = parse_variant(name);
    if (!v) throw Error(Errc::invalid_config, "unknown variant '" + name + "'");
    return *v;
}

inline void print_result(std::ostream& out, const SplitResult& r) {
    out << "total_cost: " << fmt(r.total_cost) << '\n';
    out << "routes: " << r.routes.size() << '\n';
    for (std::size_t k = 0; k < r.routes.size(); ++k)
        out << (k ? " " : "") << '(' << r.routes[k].from << ',' << r.routes[k].to << ']';
    out << '\n';
    out << "pushes: " << r.counters.pushes << " pops: " << r.counters.pops
        << " cursor_moves: " << r.counters.cursor_moves << '\n';
}

} // namespace detail

inline int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Split giant tours into vehicle routes"};
    app.require_subcommand(1);

    // gen
    auto* gen = app.add_subcommand("gen", "generate an instance and a tour");
    std::size_t gen_n = 0;
    std::uint64_t gen_seed = 1;
    std::string gen_variant = "cvrp", gen_out, gen_tour_out;
    double gen_service = 10.0, gen_capacity = 100.0, gen_qmult = 1.0, gen_bmult = 1.0;
    std::int64_t gen_coord_max = 1000;
    bool gen_unrounded = false;
    gen->add_option("--n", gen_n, "number of customers")->required();
    gen->add_option("--seed", gen_seed, "random seed");
    gen->add_option("--variant", gen_variant, "cvrp | spdtw | soft-spd | soft-tw");
    gen->add_option("--service-time", gen_service, "service time for every customer");
    gen->add_option("--capacity", gen_capacity, "base vehicle capacity");
    gen->add_option("--q-mult", gen_qmult, "capacity multiplier");
    gen->add_option("--b-mult", gen_bmult, "closing window and horizon multiplier");
    gen->add_option("--coord-max", gen_coord_max, "coordinates are drawn from 0..coord-max");
    gen->add_flag("--unrounded", gen_unrounded, "keep fractional distances");
    gen->add_option("--out", gen_out, "instance file")->required();
    gen->add_option("--tour-out", gen_tour_out, "tour file (default: <out>.tour)");

    // split
    auto* split = app.add_subcommand("split", "split a tour");
    std::string sp_instance, sp_tour, sp_variant, sp_algorithm = "linear";
    PenaltyParams sp_params{1.0, 1.0};
    bool sp_check = false;
    std::size_t sp_cap = default_oracle_cap;
    split->add_option("--instance", sp_instance, "instance file")->required();
    split->add_option("--tour", sp_tour, "tour file")->required();
    split->add_option("--variant", sp_variant, "cvrp | spdtw | soft-spd | soft-tw")->required();
    split->add_option("--algorithm", sp_algorithm, "bellman | linear | oracle | generalized");
    split->add_option("--alpha", sp_params.alpha, "capacity penalty factor");
    split->add_option("--beta", sp_params.beta, "time warp penalty factor");
    split->add_flag("--check", sp_check, "compare against the brute-force oracle");
    split->add_option("--oracle-cap", sp_cap, "largest n the oracle accepts");

    // verify
    auto* verify = app.add_subcommand("verify", "check triangle inequality and singleton feasibility");
    std::string vf_instance;
    bool vf_full = false;
    verify->add_option("--instance", vf_instance, "instance file")->required();
    verify->add_flag("--full", vf_full, "check every triple, not only those with the depot");

    // bench
    auto* bench = app.add_subcommand("bench", "time Bellman against linear splits");
    std::vector<std::size_t> bn_sizes{100, 200, 400, 800};
    std::vector<std::string> bn_cells{"1:10"};
    std::vector<std::string> bn_variants{"spdtw", "soft-spd", "soft-tw"};
    BenchConfig bn_cfg;
    std::string bn_out;
    bench->add_option("--sizes", bn_sizes, "instance sizes")->delimiter(',');
    bench->add_option("--cells", bn_cells, "q_mult:b_mult pairs, or 'grid'")->delimiter(',');
    bench->add_option("--variants", bn_variants, "variants to time")->delimiter(',');
    bench->add_option("--reps", bn_cfg.reps, "timed repetitions");
    bench->add_option("--warmups", bn_cfg.warmups, "untimed warmup runs");
    bench->add_option("--seed", bn_cfg.seed, "random seed");
    bench->add_option("--alpha", bn_cfg.params.alpha, "capacity penalty factor");
    bench->add_option("--beta", bn_cfg.params.beta, "time warp penalty factor");
    bench->add_option("--service-time", bn_cfg.service_time, "service time");
    bench->add_flag("--parallel", bn_cfg.parallel, "run cells concurrently (noisier timings)");
    bench->add_option("--out", bn_out, "report CSV")->required();

    // plotdata
    auto* plot = app.add_subcommand("plotdata", "speedup series from a benchmark report");
    std::string pl_report, pl_out;
    plot->add_option("--report", pl_report, "report CSV")->required();
    plot->add_option("--out", pl_out, "speedup CSV")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        if (*gen) {
            const Variant variant = detail::variant_or_throw(gen_variant);
            BaseParams base;
            base.n = gen_n;
            base.seed = gen_seed;
            base.capacity = gen_capacity;
            base.coord_max = gen_coord_max;
            base.rounding = gen_unrounded ? Rounding::none : Rounding::ceil;
            Generated g = generate_base(base);
            if (variant != Variant::cvrp) g.instance = extend_to_spdtw(g.instance, g.tour, gen_seed, gen_service);
            g.instance = apply_multipliers(g.instance, gen_qmult, gen_bmult);
            const std::string tour_path = gen_tour_out.empty() ? gen_out + ".tour" : gen_tour_out;
            write_file(gen_out, [&](std::ostream& os) { write_instance(os, g.instance); });
            write_file(tour_path, [&](std::ostream& os) { write_tour(os, g.tour); });
            out << "wrote " << gen_out << " and " << tour_path << '\n';
            return exit_ok;
        }

        if (*split) {
            const Variant variant = detail::variant_or_throw(sp_variant);
            const auto algorithm = parse_algorithm(sp_algorithm);
            if (!algorithm) throw Error(Errc::invalid_config, "unknown algorithm '" + sp_algorithm + "'");
            validate_params(sp_params);
            const Instance inst = read_file<Instance>(sp_instance, [](std::istream& is) { return read_instance(is); });
            const Tour tour = read_file<Tour>(sp_tour, [](std::istream& is) { return read_tour(is); });
            const TourData data = project_tour(inst, tour);
            if (sp_check && data.n > sp_cap)
                throw Error(Errc::oracle_cap, "refusing --check: n = " + std::to_string(data.n) +
                                                  " exceeds the oracle cap of " + std::to_string(sp_cap));
            const SplitResult r = *algorithm == Algorithm::oracle ? oracle_split(data, variant, sp_params, sp_cap)
                                                                  : run_split(data, variant, *algorithm, sp_params);
            out << "variant: " << to_string(variant) << '\n' << "algorithm: " << to_string(*algorithm) << '\n';
            detail::print_result(out, r);
            if (sp_check) {
                const SplitResult ref = oracle_split(data, variant, sp_params, sp_cap);
                if (!costs_agree(r.total_cost, ref.total_cost)) {
                    err << "check: MISMATCH, oracle cost " << detail::fmt(ref.total_cost) << '\n';
                    return exit_mismatch;
                }
                out << "check: agrees with oracle (" << detail::fmt(ref.total_cost) << ")\n";
            }
            return exit_ok;
        }

        if (*verify) {
            const Instance inst = read_file<Instance>(vf_instance, [](std::istream& is) { return read_instance(is); });
            const VerifyReport rep = verify_instance(inst, vf_full ? TriangleScope::full : TriangleScope::depot);
            out << "triangle triples checked: " << rep.triangle.checked
                << ", violations: " << rep.triangle.violation_count << '\n';
            for (const auto& v : rep.triangle.violations)
                out << "  t(" << v.i << ',' << v.j << ") + t(" << v.j << ',' << v.k << ") < t(" << v.i << ',' << v.k
                    << ") by " << detail::fmt(v.excess) << '\n';
            out << "infeasible singleton routes: " << rep.bad_singletons.size() << '\n';
            for (std::size_t id : rep.bad_singletons) out << "  customer " << id << '\n';
            out << (rep.ok() ? "ok" : "FAILED") << '\n';
            return rep.ok() ? exit_ok : exit_validation;
        }

        if (*bench) {
            bn_cfg.sizes = bn_sizes;
            bn_cfg.cells = detail::parse_cells(bn_cells);
            bn_cfg.variants.clear();
            for (const std::string& v : bn_variants) bn_cfg.variants.push_back(detail::variant_or_throw(v));
            const BenchReport report = run_benchmark(bn_cfg);
            write_file(bn_out, [&](std::ostream& os) { write_report(os, report); });
            for (const SpeedupPoint& p : speedup_series(report))
                out << to_string(p.variant) << " n=" << p.n << " q*" << detail::fmt(p.q_mult) << " b*"
                    << detail::fmt(p.b_mult) << " bellman " << detail::fmt(p.bellman_ms) << " ms, linear "
                    << detail::fmt(p.linear_ms) << " ms, speedup " << detail::fmt(p.speedup) << '\n';
            if (bn_cfg.sizes.size() >= 4)
                for (const ScalingFit& f : estimate_scaling(report))
                    out << "slope " << to_string(f.variant) << ' ' << to_string(f.algorithm) << " q*"
                        << detail::fmt(f.cell.q_mult) << ": " << detail::fmt(f.slope) << '\n';
            return exit_ok;
        }

        if (*plot) {
            const BenchReport report = read_file<BenchReport>(pl_report, [](std::istream& is) { return read_report(is); });
            const auto points = speedup_series(report);
            write_file(pl_out, [&](std::ostream& os) { write_speedup(os, points); });
            out << "wrote " << points.size() << " points to " << pl_out << '\n';
            return exit_ok;
        }
    } catch (const Error& e) {
        err << e.what() << '\n';
        return exit_code_for(e.code());
    }
    return exit_usage;
}

} // namespace linsplit
