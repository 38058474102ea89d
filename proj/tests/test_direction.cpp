#include <gtest/gtest.h>

#include <random>

#include "fixtures.hpp"

using namespace mm;

TEST(Direction, SmallDirections) {
    auto md = m_direction(fx::cycle(2), fx::cycle_pm(2));
    EXPECT_EQ(md.digraph.n(), 2);
    EXPECT_TRUE(md.digraph.has_arc(0, 1));
    EXPECT_TRUE(md.digraph.has_arc(1, 0));
    auto k2 = m_direction(fx::k2(), {{0, 1}});
    EXPECT_EQ(k2.digraph.n(), 1);
    EXPECT_TRUE(k2.digraph.arcs().empty());
    auto c6 = m_direction(fx::cycle(3), fx::cycle_pm(3));
    EXPECT_TRUE(isomorphic(c6.digraph, fx::dicycle(3)));
    EXPECT_THROW(m_direction(fx::cycle(2), {{0, 2}}), Error);
}

TEST(Direction, Splits) {
    auto s1 = split(Digraph(1, {}));
    Matching k2m{{0, 1}};
    EXPECT_TRUE(isomorphic(s1.graph, &s1.matching, fx::k2(), &k2m));
    EXPECT_TRUE(isomorphic(split(fx::bidirected_complete(3)).graph, nullptr, fx::k33(), nullptr));
    auto s3 = split(fx::dicycle(3));
    auto pm = fx::cycle_pm(3);
    EXPECT_TRUE(isomorphic(s3.graph, &s3.matching, fx::cycle(3), &pm));
}

TEST(Direction, RoundTripOnRandomDigraphs) {
    std::mt19937_64 rng(3);
    for (int it = 0; it < 100; ++it) {
        auto d = random_digraph(2 + static_cast<int>(rng() % 6), 0.35, rng);
        auto s = split(d);
        auto back = m_direction(s.graph, s.matching);
        EXPECT_TRUE(isomorphic(back.digraph, d));
    }
}

TEST(Direction, Biorientation) {
    auto d = biorientation(Graph(2, {{0, 1}}));
    EXPECT_TRUE(isomorphic(d, fx::dicycle(2)));
    EXPECT_EQ(biorientation(Graph(3, {{0, 1}, {1, 2}, {0, 2}})).arcs().size(), 6u);
    EXPECT_TRUE(biorientation(Graph(4, {})).arcs().empty());
}

TEST(Direction, Extendability) {
    EXPECT_TRUE(is_k_extendable(fx::cycle(3), fx::cycle_pm(3), 1));
    EXPECT_TRUE(is_k_extendable(fx::k33(), fx::cycle_pm(3), 2));
    EXPECT_FALSE(is_k_extendable(fx::cycle(4), fx::cycle_pm(4), 2));
    EXPECT_TRUE(is_k_extendable_bruteforce(fx::k33(), 2));
    EXPECT_FALSE(is_k_extendable_bruteforce(fx::cycle(4), 2));
}

TEST(Direction, StrongConnectivity) {
    EXPECT_TRUE(is_strongly_k_connected(fx::bidirected_complete(4), 3));
    EXPECT_FALSE(is_strongly_k_connected(fx::bidirected_complete(4), 4));
    EXPECT_TRUE(is_strongly_k_connected(fx::dicycle(5), 1));
    EXPECT_FALSE(is_strongly_k_connected(fx::dicycle(5), 2));
    EXPECT_FALSE(is_strongly_k_connected(fx::dipath(3), 1));
}
