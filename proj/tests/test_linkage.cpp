#include <gtest/gtest.h>

#include <random>

#include "fixtures.hpp"

using namespace mm;

TEST(Linkage, BruteForceExamples) {
    DappSolution sol;
    auto c6 = fx::cycle(3);
    ASSERT_TRUE(dapp_bruteforce(c6, {{0, 4}}, &sol));
    EXPECT_TRUE(validate_solution(c6, {{0, 4}}, sol));
    EXPECT_FALSE(dapp_bruteforce(fx::two_c4(), {{0, 6}}));
    EXPECT_TRUE(dapp_bruteforce(fx::cycle(2), {{0, 2}}));
    EXPECT_THROW(dapp_bruteforce(fx::cycle(7), {{0, 7}}), Error);
    EXPECT_THROW(dapp_bruteforce(c6, {{4, 0}}), Error);
}

TEST(Linkage, SolutionValidator) {
    auto c6 = fx::cycle(3);
    DappSolution good{fx::cycle_pm(3), {{0, 5, 2, 4}}};
    EXPECT_TRUE(validate_solution(c6, {{0, 4}}, good));
    // the inner edge b2 a2 must be a matching edge
    DappSolution bad{{{0, 5}, {1, 3}, {2, 4}}, {{0, 5, 2, 4}}};
    EXPECT_FALSE(validate_solution(c6, {{0, 4}}, bad));
}

TEST(Linkage, WCompletion) {
    auto c6 = fx::cycle(3);
    EXPECT_EQ(w_completion(c6, {{0, 4}}, {{0, 3}, {1, 4}}), (std::vector<Edge>{{1, 3}}));
    EXPECT_TRUE(w_completion(fx::cycle(2), {{0, 2}}, {{0, 2}}).empty());
    EXPECT_TRUE(w_completion(fx::k33(), {{0, 3}, {1, 4}}, {{0, 4}, {1, 3}}).empty());
    EXPECT_THROW(w_completion(c6, {{0, 4}}, {{0, 3}}), Error);
}

TEST(Linkage, Proxies) {
    auto c6 = fx::cycle(3);
    Matching w{{0, 3}, {1, 4}};
    auto ps = make_proxies(c6, {{0, 4}}, w);
    for (const auto& p : ps) {
        EXPECT_TRUE(is_distinct(p.pairs));
        Matching all = w;
        all.insert(all.end(), p.w.begin(), p.w.end());
        EXPECT_TRUE(is_matching(c6, all));
        EXPECT_TRUE(is_extendable(c6, all));
    }
    // s = a1 appears twice; its two proxies leave through different neighbours
    auto twice = make_proxies(fx::complete(5, 5), {{0, 5}, {0, 6}}, {{0, 7}, {1, 5}, {2, 6}});
    EXPECT_FALSE(twice.empty());
    for (const auto& p : twice) EXPECT_NE(p.s_edge[0].b, p.s_edge[1].b);
    EXPECT_TRUE(make_proxies(fx::path(2), {{0, 3}}, {{0, 2}, {1, 3}}).empty());
}

TEST(Linkage, SolverExamples) {
    auto c6 = fx::cycle(3);
    DappSolution sol;
    ASSERT_TRUE(dapp_solve(c6, {{0, 4}}, compute_pmd(c6).dec, &sol));
    EXPECT_TRUE(validate_solution(c6, {{0, 4}}, sol));
    auto c8 = fx::cycle(4);
    auto dec8 = compute_pmd(c8).dec;
    DappInstance crossing{{0, 6}, {1, 7}};
    EXPECT_EQ(dapp_solve(c8, crossing, dec8), dapp_bruteforce(c8, crossing));
    auto two = fx::two_c4();
    std::vector<int> order(two.n());
    for (int v = 0; v < two.n(); ++v) order[v] = v;
    EXPECT_FALSE(dapp_solve(two, {{0, 6}}, caterpillar(order)));
}

TEST(Linkage, AgreesWithBruteForceOnSmallCorpus) {
    for (const auto& b : fx::corpus(8)) {
        auto dec = compute_pmd(b).dec;
        for (int s = 0; s < b.n1(); ++s)
            for (int t = b.n1(); t < b.n(); ++t) {
                DappInstance inst{{s, t}};
                DappSolution sol;
                bool got = dapp_solve(b, inst, dec, &sol);
                ASSERT_EQ(got, dapp_bruteforce(b, inst)) << s << " " << t;
                if (got) EXPECT_TRUE(validate_solution(b, inst, sol));
                EXPECT_EQ(dapp_solve_proxied(b, inst, dec), got);
            }
    }
}

TEST(Linkage, ExtendingSolutions) {
    std::mt19937_64 rng(29);
    int checked = 0;
    for (const auto& b : fx::corpus(8)) {
        auto dec = compute_pmd(b).dec;
        auto pms = enumerate_perfect_matchings(b);
        const auto& m = pms[rng() % pms.size()];
        Matching some;
        for (const auto& e : m)
            if (rng() % 2) some.push_back(e);
        for (const Matching& f : {Matching{}, some, m}) {
            DappInstance inst{{0, b.n() - 1}};
            EXPECT_EQ(dapp_solve_extending(b, inst, f, dec), dapp_bruteforce(b, inst, nullptr, f));
            ++checked;
        }
        EXPECT_EQ(dapp_solve_extending(b, {{0, b.n() - 1}}, {}, dec), dapp_solve(b, {{0, b.n() - 1}}, dec));
    }
    EXPECT_GT(checked, 0);
    auto c4 = fx::cycle(2);
    EXPECT_THROW(dapp_solve_extending(c4, {{0, 2}}, {{0, 2}, {1, 2}}, compute_pmd(c4).dec), Error);
}

TEST(Linkage, Limited) {
    auto c12 = fx::cycle(6);
    VertexSet all(c12.n());
    for (int v = 0; v < c12.n(); ++v) all[v] = v;
    EXPECT_TRUE(is_limited(c12, {}, {{0, 6}}, all, 1, 0).limited);
    // two separate pieces inside a component, whose cut is empty
    auto two = fx::two_c4();
    auto r = is_limited(two, {}, {{0, 4}, {1, 5}}, {0, 1, 2, 3, 4, 5, 6, 7}, 1, 0);
    EXPECT_FALSE(r.limited);
    EXPECT_FALSE(r.counterexample.empty());
}
