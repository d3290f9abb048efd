#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <linsplit/cli.hpp>

#include "support.hpp"

using namespace linsplit;
using namespace testing_support;
namespace fs = std::filesystem;

namespace {

struct Cli {
    std::string out, err;
    int code = 0;
};

Cli cli(std::vector<std::string> args) {
    args.insert(args.begin(), "linsplit");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    Cli r;
    r.code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

class TempDir : public ::testing::Test {
protected:
    void SetUp() override {
        dir = fs::temp_directory_path() /
              ("linsplit-" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
        fs::remove_all(dir);
        fs::create_directories(dir);
    }
    void TearDown() override { fs::remove_all(dir); }
    std::string path(const std::string& name) const { return (dir / name).string(); }
    fs::path dir;
};

void put(const std::string& path, const std::string& text) { std::ofstream(path) << text; }

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

double cost_line(const std::string& out) {
    const auto at = out.find("total_cost: ");
    return std::stod(out.substr(at + 12));
}

} // namespace

TEST(InstanceJson, RoundTripCoordinates) {
    const Case c = make_case(11, 40, Variant::soft_tw);
    std::stringstream ss;
    write_instance(ss, c.instance);
    EXPECT_EQ(read_instance(ss), c.instance);
}

TEST(InstanceJson, RoundTripMatrices) {
    Instance inst = table2_instance();
    Matrix t(11, 2.5);
    inst.time_matrix = t;
    inst.meta.seed = 3;
    inst.meta.generator_params["note"] = "hand made";
    std::stringstream ss;
    write_instance(ss, inst);
    EXPECT_EQ(read_instance(ss), inst);
}

TEST(InstanceJson, FullPrecision) {
    Instance inst = table2_instance();
    inst.nodes[2].open = 0.1 + 0.2;
    inst.capacity = 1.0 / 3.0;
    std::stringstream ss;
    write_instance(ss, inst);
    const Instance back = read_instance(ss);
    EXPECT_EQ(back.nodes[2].open, 0.1 + 0.2);
    EXPECT_EQ(back.capacity, 1.0 / 3.0);
}

TEST(InstanceJson, ParseErrors) {
    auto code = [](const std::string& text) {
        std::istringstream is(text);
        try {
            (void)read_instance(is);
        } catch (const Error& e) {
            return e.code();
        }
        return Errc::mismatch;
    };
    EXPECT_EQ(code("{not json"), Errc::parse);
    EXPECT_EQ(code(R"({"version": 1})"), Errc::parse);
    EXPECT_EQ(code(R"({"version": 9, "n": 0, "q": 1, "t_horizon": 1, "customers": []})"), Errc::parse);
    EXPECT_EQ(code(R"({"version": 1, "n": 1, "q": 1, "t_horizon": 9,
                       "customers": [{"d": "x", "p": 0, "a": 0, "b": 9, "s": 0, "x": 1, "y": 1}],
                       "depot": {"x": 0, "y": 0}})"),
              Errc::parse);
    // neither coordinates nor a matrix
    EXPECT_EQ(code(R"({"version": 1, "n": 1, "q": 1, "t_horizon": 9,
                       "customers": [{"d": 1, "p": 0, "a": 0, "b": 9, "s": 0}]})"),
              Errc::parse);
}

TEST(TourText, RoundTripAndErrors) {
    Tour t{{3, 1, 2}};
    std::stringstream ss;
    write_tour(ss, t);
    EXPECT_EQ(ss.str(), "3 1 2\n");
    EXPECT_EQ(read_tour(ss).order, t.order);
    std::istringstream bad("1 2 x");
    EXPECT_THROW(read_tour(bad), Error);
}

TEST(ReportCsv, HeaderAndRoundTrip) {
    EXPECT_EQ(report_header, "instance,n,variant,algorithm,q_mult,b_mult,alpha,beta,reps,mean_ms,median_ms,"
                             "stddev_ms,cost,pushes,pops,cursor_moves");
    BenchReport r;
    BenchRow row;
    row.instance = "gen-n5-s6";
    row.n = 5;
    row.variant = Variant::soft_tw;
    row.algorithm = Algorithm::linear;
    row.q_mult = 2;
    row.b_mult = 20;
    row.alpha = 0.1;
    row.beta = 10;
    row.reps = 3;
    row.mean_ms = 0.123456789012345;
    row.median_ms = 1e-7;
    row.stddev_ms = 0;
    row.cost = 1234.5;
    row.counters = {11, 7, 3};
    r.rows.push_back(row);
    std::stringstream ss;
    write_report(ss, r);
    const BenchReport back = read_report(ss);
    ASSERT_EQ(back.rows.size(), 1u);
    const BenchRow& b = back.rows[0];
    EXPECT_EQ(b.instance, row.instance);
    EXPECT_EQ(b.variant, row.variant);
    EXPECT_EQ(b.algorithm, row.algorithm);
    EXPECT_EQ(b.alpha, 0.1);
    EXPECT_EQ(b.mean_ms, row.mean_ms);
    EXPECT_EQ(b.median_ms, row.median_ms);
    EXPECT_EQ(b.cost, row.cost);
    EXPECT_EQ(b.counters, row.counters);
}

TEST(ReportCsv, StrictReader) {
    auto fails_with = [](const std::string& text, const std::string& needle) {
        std::istringstream is(text);
        try {
            (void)read_report(is);
        } catch (const Error& e) {
            EXPECT_EQ(e.code(), Errc::parse);
            EXPECT_NE(std::string(e.what()).find(needle), std::string::npos) << e.what();
            return;
        }
        ADD_FAILURE() << "accepted: " << text;
    };
    const std::string h = std::string(report_header) + "\n";
    fails_with("instance,n\n", "line 1");
    fails_with(h + "a,1,cvrp,linear,1,1,0,0,1,1,1,0,5,1,1\n", "line 2");
    fails_with(h + "a,1,cvrp,linear,1,1,0,0,1,1,1,0,5,1,1,0\na,1,cvrp,linear,1,1,0,0,1,1e,1,0,5,1,1,0\n", "line 3");
    fails_with(h + "a,1,nope,linear,1,1,0,0,1,1,1,0,5,1,1,0\n", "variant");
    fails_with(h + "a,-1,cvrp,linear,1,1,0,0,1,1,1,0,5,1,1,0\n", "n");
}

TEST(Exit, Codes) {
    EXPECT_EQ(exit_code_for(Errc::parse), 2);
    EXPECT_EQ(exit_code_for(Errc::invalid_config), 1);
    EXPECT_EQ(exit_code_for(Errc::invalid_instance), 3);
    EXPECT_EQ(exit_code_for(Errc::mismatch), 4);
    EXPECT_EQ(exit_code_for(Errc::no_feasible_split), 5);
}

TEST_F(TempDir, GenThenSplitAgreesWithOracle) {
    const std::string inst = path("i.json"), tour = inst + ".tour";
    ASSERT_EQ(cli({"gen", "--n", "10", "--seed", "7", "--out", inst}).code, 0);
    ASSERT_TRUE(fs::exists(tour));
    const Cli lin = cli({"split", "--instance", inst, "--tour", tour, "--variant", "cvrp", "--algorithm", "linear"});
    const Cli orc = cli({"split", "--instance", inst, "--tour", tour, "--variant", "cvrp", "--algorithm", "oracle"});
    ASSERT_EQ(lin.code, 0) << lin.err;
    ASSERT_EQ(orc.code, 0) << orc.err;
    EXPECT_EQ(cost_line(lin.out), cost_line(orc.out));
    EXPECT_NE(lin.out.find("pushes:"), std::string::npos);
}

TEST_F(TempDir, SplitCheckEveryVariant) {
    const std::string inst = path("i.json"), tour = inst + ".tour";
    ASSERT_EQ(cli({"gen", "--n", "40", "--seed", "3", "--variant", "spdtw", "--out", inst}).code, 0);
    for (const char* v : {"cvrp", "spdtw", "soft-spd", "soft-tw"})
        for (const char* a : {"bellman", "linear"}) {
            const Cli r = cli({"split", "--instance", inst, "--tour", tour, "--variant", v, "--algorithm", a,
                               "--alpha", "0.1", "--beta", "10", "--check"});
            EXPECT_EQ(r.code, 0) << v << " " << a << ": " << r.err;
            EXPECT_NE(r.out.find("agrees with oracle"), std::string::npos);
        }
}

TEST_F(TempDir, SplitErrors) {
    const std::string inst = path("i.json"), tour = inst + ".tour";
    ASSERT_EQ(cli({"gen", "--n", "20", "--seed", "3", "--out", inst}).code, 0);
    EXPECT_EQ(cli({"split", "--instance", inst, "--tour", tour, "--variant", "nope"}).code, 1);
    EXPECT_EQ(cli({"split", "--instance", inst, "--tour", tour, "--variant", "cvrp", "--algorithm", "x"}).code, 1);
    EXPECT_EQ(cli({"split", "--instance", inst, "--tour", tour, "--variant", "soft-spd", "--algorithm",
                   "generalized"}).code,
              1);
    const Cli capped = cli({"split", "--instance", inst, "--tour", tour, "--variant", "cvrp", "--check",
                            "--oracle-cap", "10"});
    EXPECT_EQ(capped.code, 1);
    EXPECT_NE(capped.err.find("refusing"), std::string::npos);
    EXPECT_EQ(cli({"split", "--instance", path("missing.json"), "--tour", tour, "--variant", "cvrp"}).code, 2);
    put(path("bad.json"), "{\"version\": 1,");
    EXPECT_EQ(cli({"split", "--instance", path("bad.json"), "--tour", tour, "--variant", "cvrp"}).code, 2);
    put(path("short.tour"), "1 2 3\n");
    EXPECT_EQ(cli({"split", "--instance", inst, "--tour", path("short.tour"), "--variant", "cvrp"}).code, 3);
    EXPECT_EQ(cli({"split", "--instance", inst}).code, 1);
    EXPECT_EQ(cli({}).code, 1);
}

TEST_F(TempDir, NoFeasibleSplitExitCode) {
    Instance inst = table2_instance();
    inst.nodes[2].demand = 30;
    write_file(path("i.json"), [&](std::ostream& os) { write_instance(os, inst); });
    put(path("t"), "1 2 3 4 5 6 7 8 9 10\n");
    EXPECT_EQ(cli({"split", "--instance", path("i.json"), "--tour", path("t"), "--variant", "cvrp"}).code, 5);
}

TEST_F(TempDir, Verify) {
    ASSERT_EQ(cli({"gen", "--n", "30", "--seed", "1", "--variant", "soft-tw", "--out", path("i.json")}).code, 0);
    const Cli ok = cli({"verify", "--instance", path("i.json"), "--full"});
    EXPECT_EQ(ok.code, 0) << ok.out;
    Instance bad = table2_instance();
    (*bad.cost_matrix)(0, 2) = 50; // 4 + 4 < 50
    write_file(path("bad.json"), [&](std::ostream& os) { write_instance(os, bad); });
    const Cli v = cli({"verify", "--instance", path("bad.json")});
    EXPECT_EQ(v.code, 3);
    EXPECT_NE(v.out.find("FAILED"), std::string::npos);
}

TEST_F(TempDir, BenchAndPlotdata) {
    const std::string report = path("r.csv"), speed = path("s.csv");
    const Cli b = cli({"bench", "--sizes", "50,80", "--cells", "1:10,1000:10000", "--variants", "spdtw,soft-tw",
                       "--reps", "2", "--warmups", "0", "--out", report});
    ASSERT_EQ(b.code, 0) << b.err;
    const std::string text = slurp(report);
    EXPECT_EQ(text.substr(0, text.find('\n')), report_header);
    const BenchReport parsed = read_file<BenchReport>(report, [](std::istream& is) { return read_report(is); });
    EXPECT_EQ(parsed.rows.size(), 2u * 2 * 2 * 2);
    ASSERT_EQ(cli({"plotdata", "--report", report, "--out", speed}).code, 0);
    const std::string sp = slurp(speed);
    EXPECT_EQ(sp.substr(0, sp.find('\n')), speedup_header);
    EXPECT_EQ(std::count(sp.begin(), sp.end(), '\n'), 1 + 8);
    EXPECT_EQ(cli({"bench", "--cells", "oops", "--out", report}).code, 1);
}
