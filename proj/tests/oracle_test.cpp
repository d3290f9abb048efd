#include <gtest/gtest.h>

#include <sstream>

#include "support.hpp"

using namespace linsplit;
using namespace testing_support;

// frozen from the oracle itself, and confirmed by full enumeration below
TEST(Oracle, Table2Golden) {
    const SplitResult r = oracle_split(table2(), Variant::cvrp);
    EXPECT_EQ(r.pot, (std::vector<double>{0, 10, 10, 22, 27, 39, 53, 63, 72, 79, 88}));
    EXPECT_EQ(r.routes, (std::vector<Route>{{0, 4}, {4, 8}, {8, 10}}));
    EXPECT_EQ(exhaustive_cvrp(table2()), 88);
}

TEST(Oracle, Singleton) {
    Manual m;
    m.out = {7};
    m.in = {9};
    m.step = {0};
    m.d = {3};
    m.p = {6};
    m.q = 5;
    const TourData d = manual(m);
    EXPECT_EQ(oracle_split(d, Variant::cvrp).total_cost, 16);
    EXPECT_EQ(oracle_split(d, Variant::soft_spd, {3, 0}).total_cost, 16 + 3);
}

TEST(Oracle, ZeroPenaltyBoundedBySingleRoute) {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        const Case c = make_case(seed, 30, Variant::soft_tw);
        for (Variant v : {Variant::soft_spd, Variant::soft_tw})
            EXPECT_LE(oracle_split(c.data, v, {0, 0}).total_cost, route_cost(c.data, 0, c.data.n));
    }
}

TEST(Oracle, RouteScan) {
    const TourData d = table2();
    EXPECT_EQ(oracle_route_scan(d, 0, 2, Variant::cvrp, {}).cost, 10);
    EXPECT_FALSE(oracle_route_scan(d, 0, 5, Variant::cvrp, {}).admissible);
    EXPECT_EQ(oracle_route_scan(d, 0, 5, Variant::soft_spd, {0, 0}).cost, route_cost(d, 0, 5));
    EXPECT_THROW(oracle_route_scan(d, 5, 5, Variant::cvrp, {}), Error);
}

TEST(Oracle, Cap) {
    const Case c = make_case(1, 40, Variant::cvrp);
    try {
        (void)oracle_split(c.data, Variant::cvrp, {}, 39);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::oracle_cap);
    }
}

TEST(Oracle, NoPath) {
    Manual m;
    m.out = {10};
    m.in = {10};
    m.step = {0};
    m.d = {1};
    m.b = {5};
    EXPECT_THROW(oracle_split(manual(m), Variant::hard_spdtw), Error);
}

TEST(Oracle, MatchesEnumeration) {
    for (std::uint64_t seed = 1; seed <= 50; ++seed)
        for (std::size_t n = 1; n <= 12; ++n) {
            const Case c = make_case(seed, n, Variant::cvrp);
            EXPECT_EQ(oracle_split(c.data, Variant::cvrp).total_cost, exhaustive_cvrp(c.data));
        }
}

TEST(Oracle, StableUnderReserialization) {
    const Case c = make_case(9, 60, Variant::hard_spdtw);
    std::stringstream ss;
    write_instance(ss, c.instance);
    const Instance back = read_instance(ss);
    EXPECT_EQ(oracle_split(project_tour(back, c.tour), Variant::hard_spdtw).pot,
              oracle_split(c.data, Variant::hard_spdtw).pot);
}
