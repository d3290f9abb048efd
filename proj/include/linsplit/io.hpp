#pragma once

#include <charconv>
#include <cstddef>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

#include <json.hpp>

#include "bench.hpp"
#include "model.hpp"

namespace linsplit {

inline constexpr int instance_format_version = 1;
inline constexpr std::string_view report_header =
    "instance,n,variant,algorithm,q_mult,b_mult,alpha,beta,reps,mean_ms,median_ms,stddev_ms,cost,pushes,pops,"
    "cursor_moves";
inline constexpr std::string_view speedup_header = "n,variant,q_mult,b_mult,alpha,beta,bellman_mean_ms,linear_mean_ms,speedup";

namespace detail {

[[noreturn]] inline void parse_fail(const std::string& what) { throw Error(Errc::parse, what); }

inline double get_number(const nlohmann::json& obj, const char* key, const std::string& where) {
    auto it = obj.find(key);
    if (it == obj.end()) parse_fail("missing field " + where + "." + key);
    if (!it->is_number()) parse_fail("field " + where + "." + key + " is not a number");
    return it->get<double>();
}

inline nlohmann::json matrix_to_json(const Matrix& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t i = 0; i < m.dim(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t j = 0; j < m.dim(); ++j) row.push_back(m(i, j));
        rows.push_back(std::move(row));
    }
    return rows;
}

inline Matrix matrix_from_json(const nlohmann::json& rows, std::size_t dim, const char* name) {
    if (!rows.is_array() || rows.size() != dim)
        parse_fail(std::string(name) + " must have " + std::to_string(dim) + " rows");
    Matrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        const auto& row = rows[i];
        if (!row.is_array() || row.size() != dim)
            parse_fail(std::string(name) + "[" + std::to_string(i) + "] must have " + std::to_string(dim) + " entries");
        for (std::size_t j = 0; j < dim; ++j) {
            if (!row[j].is_number())
                parse_fail(std::string(name) + "[" + std::to_string(i) + "][" + std::to_string(j) + "] is not a number");
            m(i, j) = row[j].get<double>();
        }
    }
    return m;
}

inline std::string fmt(double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

template <class T>
T parse_field(std::string_view text, std::size_t line, std::string_view name) {
    T value{};
    auto res = std::from_chars(text.data(), text.data() + text.size(), value);
    if (res.ec != std::errc{} || res.ptr != text.data() + text.size())
        parse_fail("line " + std::to_string(line) + ": bad " + std::string(name) + " '" + std::string(text) + "'");
    return value;
}

inline std::vector<std::string_view> split_csv(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    for (;;) {
        const std::size_t comma = line.find(',', start);
        if (comma == std::string_view::npos) {
            out.push_back(line.substr(start));
            return out;
        }
        out.push_back(line.substr(start, comma - start));
        start = comma + 1;
    }
}

} // namespace detail

inline nlohmann::json instance_to_json(const Instance& inst) {
    nlohmann::json j;
    j["version"] = instance_format_version;
    j["n"] = inst.customer_count();
    j["q"] = inst.capacity;
    j["t_horizon"] = inst.horizon;
    const bool has_coords = inst.coords.size() == inst.nodes.size();
    if (has_coords) {
        j["depot"] = {{"x", inst.coords[0].x}, {"y", inst.coords[0].y}};
        j["rounding"] = inst.rounding == Rounding::ceil ? "ceil" : "none";
    }
    nlohmann::json customers = nlohmann::json::array();
    for (std::size_t i = 1; i < inst.nodes.size(); ++i) {
        const Node& v = inst.nodes[i];
        nlohmann::json c = {{"d", v.demand}, {"p", v.pickup}, {"a", v.open}, {"b", v.close}, {"s", v.service}};
        if (has_coords) {
            c["x"] = inst.coords[i].x;
            c["y"] = inst.coords[i].y;
        }
        customers.push_back(std::move(c));
    }
    j["customers"] = std::move(customers);
    if (inst.cost_matrix) j["cost_matrix"] = detail::matrix_to_json(*inst.cost_matrix);
    if (inst.time_matrix) j["time_matrix"] = detail::matrix_to_json(*inst.time_matrix);
    nlohmann::json meta;
    meta["seed"] = inst.meta.seed ? nlohmann::json(*inst.meta.seed) : nlohmann::json(nullptr);
    meta["generator_params"] = inst.meta.generator_params;
    j["meta"] = std::move(meta);
    return j;
}

inline Instance instance_from_json(const nlohmann::json& j) {
    using detail::get_number;
    using detail::parse_fail;
    if (!j.is_object()) parse_fail("instance must be a JSON object");
    if (j.contains("version") && (!j["version"].is_number_integer() || j["version"].get<int>() != instance_format_version))
        parse_fail("unsupported instance version");
    if (!j.contains("n") || !j["n"].is_number_unsigned()) parse_fail("field n must be a nonnegative integer");
    const auto n = j["n"].get<std::size_t>();

    Instance inst;
    inst.capacity = get_number(j, "q", "instance");
    inst.horizon = get_number(j, "t_horizon", "instance");
    inst.nodes.assign(n + 1, depot_node(inst.horizon));

    if (!j.contains("customers") || !j["customers"].is_array()) parse_fail("missing customers array");
    const auto& customers = j["customers"];
    if (customers.size() != n)
        parse_fail("customers has " + std::to_string(customers.size()) + " entries, n = " + std::to_string(n));

    const bool has_coords = j.contains("depot");
    if (has_coords) {
        inst.coords.resize(n + 1);
        inst.coords[0] = {get_number(j["depot"], "x", "depot"), get_number(j["depot"], "y", "depot")};
        const std::string rounding = j.value("rounding", std::string("ceil"));
        if (rounding == "ceil")
            inst.rounding = Rounding::ceil;
        else if (rounding == "none")
            inst.rounding = Rounding::none;
        else
            parse_fail("rounding must be 'ceil' or 'none'");
    }
    for (std::size_t i = 1; i <= n; ++i) {
        const auto& c = customers[i - 1];
        const std::string where = "customers[" + std::to_string(i - 1) + "]";
        if (!c.is_object()) parse_fail(where + " must be an object");
        Node& v = inst.nodes[i];
        v.demand = get_number(c, "d", where);
        v.pickup = get_number(c, "p", where);
        v.open = get_number(c, "a", where);
        v.close = get_number(c, "b", where);
        v.service = get_number(c, "s", where);
        if (has_coords) inst.coords[i] = {get_number(c, "x", where), get_number(c, "y", where)};
    }
    if (j.contains("cost_matrix")) inst.cost_matrix = detail::matrix_from_json(j["cost_matrix"], n + 1, "cost_matrix");
    if (j.contains("time_matrix")) inst.time_matrix = detail::matrix_from_json(j["time_matrix"], n + 1, "time_matrix");
    if (!has_coords && !inst.cost_matrix) parse_fail("instance needs depot/customer coordinates or a cost_matrix");

    if (j.contains("meta")) {
        const auto& meta = j["meta"];
        if (meta.contains("seed") && !meta["seed"].is_null()) {
            if (!meta["seed"].is_number_unsigned()) parse_fail("meta.seed must be a nonnegative integer");
            inst.meta.seed = meta["seed"].get<std::uint64_t>();
        }
        if (meta.contains("generator_params")) {
            const auto& params = meta["generator_params"];
            if (!params.is_object()) parse_fail("meta.generator_params must be an object");
            for (auto it = params.begin(); it != params.end(); ++it) {
                if (!it.value().is_string()) parse_fail("meta.generator_params." + it.key() + " must be a string");
                inst.meta.generator_params[it.key()] = it.value().get<std::string>();
            }
        }
    }
    validate_instance(inst);
    return inst;
}

inline void write_instance(std::ostream& os, const Instance& inst) { os << instance_to_json(inst).dump(2) << '\n'; }

inline Instance read_instance(std::istream& is) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(is);
    } catch (const nlohmann::json::parse_error& e) {
        throw Error(Errc::parse, std::string("malformed JSON: ") + e.what());
    }
    return instance_from_json(j);
}

inline void write_tour(std::ostream& os, const Tour& tour) {
    for (std::size_t k = 0; k < tour.order.size(); ++k) os << (k ? " " : "") << tour.order[k];
    os << '\n';
}

inline Tour read_tour(std::istream& is) {
    Tour tour;
    std::string token;
    std::size_t position = 0;
    while (is >> token) {
        ++position;
        tour.order.push_back(detail::parse_field<std::size_t>(token, 1, "tour entry " + std::to_string(position)));
    }
    return tour;
}

inline void write_report(std::ostream& os, const BenchReport& report) {
    using detail::fmt;
    os << report_header << '\n';
    for (const BenchRow& r : report.rows) {
        os << r.instance << ',' << r.n << ',' << to_string(r.variant) << ',' << to_string(r.algorithm) << ','
           << fmt(r.q_mult) << ',' << fmt(r.b_mult) << ',' << fmt(r.alpha) << ',' << fmt(r.beta) << ',' << r.reps
           << ',' << fmt(r.mean_ms) << ',' << fmt(r.median_ms) << ',' << fmt(r.stddev_ms) << ',' << fmt(r.cost) << ','
           << r.counters.pushes << ',' << r.counters.pops << ',' << r.counters.cursor_moves << '\n';
    }
}

inline BenchReport read_report(std::istream& is) {
    using detail::parse_field;
    BenchReport report;
    std::string line;
    if (!std::getline(is, line) || line != report_header) detail::parse_fail("line 1: unexpected report header");
    std::size_t lineno = 1;
    while (std::getline(is, line)) {
        ++lineno;
        if (line.empty()) continue;
        const auto f = detail::split_csv(line);
        if (f.size() != 16)
            detail::parse_fail("line " + std::to_string(lineno) + ": expected 16 fields, got " + std::to_string(f.size()));
        BenchRow r;
        r.instance = std::string(f[0]);
        r.n = parse_field<std::size_t>(f[1], lineno, "n");
        auto variant = parse_variant(f[2]);
        auto algorithm = parse_algorithm(f[3]);
        if (!variant) detail::parse_fail("line " + std::to_string(lineno) + ": unknown variant");
        if (!algorithm) detail::parse_fail("line " + std::to_string(lineno) + ": unknown algorithm");
        r.variant = *variant;
        r.algorithm = *algorithm;
        r.q_mult = parse_field<double>(f[4], lineno, "q_mult");
        r.b_mult = parse_field<double>(f[5], lineno, "b_mult");
        r.alpha = parse_field<double>(f[6], lineno, "alpha");
        r.beta = parse_field<double>(f[7], lineno, "beta");
        r.reps = parse_field<std::size_t>(f[8], lineno, "reps");
        r.mean_ms = parse_field<double>(f[9], lineno, "mean_ms");
        r.median_ms = parse_field<double>(f[10], lineno, "median_ms");
        r.stddev_ms = parse_field<double>(f[11], lineno, "stddev_ms");
        r.cost = parse_field<double>(f[12], lineno, "cost");
        r.counters.pushes = parse_field<std::size_t>(f[13], lineno, "pushes");
        r.counters.pops = parse_field<std::size_t>(f[14], lineno, "pops");
        r.counters.cursor_moves = parse_field<std::size_t>(f[15], lineno, "cursor_moves");
        report.rows.push_back(std::move(r));
    }
    return report;
}

inline void write_speedup(std::ostream& os, const std::vector<SpeedupPoint>& points) {
    using detail::fmt;
    os << speedup_header << '\n';
    for (const SpeedupPoint& p : points)
        os << p.n << ',' << to_string(p.variant) << ',' << fmt(p.q_mult) << ',' << fmt(p.b_mult) << ',' << fmt(p.alpha)
           << ',' << fmt(p.beta) << ',' << fmt(p.bellman_ms) << ',' << fmt(p.linear_ms) << ',' << fmt(p.speedup)
           << '\n';
}

template <class T, class Reader>
T read_file(const std::string& path, Reader reader) {
    std::ifstream in(path);
    if (!in) throw Error(Errc::parse, "cannot open " + path);
    return reader(in);
}

template <class Writer>
void write_file(const std::string& path, Writer writer) {
    std::ofstream out(path);
    if (!out) throw Error(Errc::invalid_config, "cannot write " + path);
    writer(out);
    if (!out) throw Error(Errc::invalid_config, "failed writing " + path);
}

} // namespace linsplit
