#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "fixtures.hpp"

using namespace mm;

namespace {

PMDecomposition pair_tree(int u, int v) {
    PMDecomposition dec;
    int a = dec.add_node(u), b = dec.add_node(v);
    dec.link(a, b);
    return dec;
}

// Internal nodes x, y; x holds leaves p, q and y holds leaves r, s.
PMDecomposition four_leaf_tree(int p, int q, int r, int s) {
    PMDecomposition dec;
    int x = dec.add_node(), y = dec.add_node();
    dec.link(x, y);
    dec.link(x, dec.add_node(p));
    dec.link(x, dec.add_node(q));
    dec.link(y, dec.add_node(r));
    dec.link(y, dec.add_node(s));
    return dec;
}

Digraph bidirected_star(int leaves) {
    std::vector<Arc> a;
    for (int i = 1; i <= leaves; ++i) {
        a.push_back({0, i});
        a.push_back({i, 0});
    }
    return Digraph(leaves + 1, a);
}

}  // namespace

TEST(Decomp, LeafTreeValidation) {
    EXPECT_EQ(leaf_tree_problem(four_leaf_tree(0, 1, 2, 3), 4), "");
    EXPECT_NE(leaf_tree_problem(four_leaf_tree(0, 1, 2, 2), 4), "");
    EXPECT_NE(leaf_tree_problem(pair_tree(0, 1), 3), "");
    auto bad = four_leaf_tree(0, 1, 2, 3);
    bad.link(2, 3);
    EXPECT_NE(leaf_tree_problem(bad, 4), "");
    EXPECT_THROW(pmd_width(fx::cycle(2), pair_tree(0, 1)), Error);
}

TEST(Decomp, WidthOfSmallDecompositions) {
    auto c4 = fx::cycle(2);
    EXPECT_EQ(pmd_width(c4, four_leaf_tree(0, 1, 2, 3)), 2);
    EXPECT_EQ(pmd_width(c4, four_leaf_tree(0, 2, 1, 3)), 2);
    EXPECT_EQ(pmd_width(c4, four_leaf_tree(0, 3, 1, 2)), 2);
    EXPECT_EQ(pmd_width(fx::k2(), pair_tree(0, 1)), 1);
    // C8 grouped as (a0 b0)(a1 b1) | (a2 b2)(a3 b3)
    PMDecomposition dec;
    int l = dec.add_node(), r = dec.add_node();
    dec.link(l, r);
    int pairs[4][2] = {{0, 4}, {1, 5}, {2, 6}, {3, 7}};
    for (int i = 0; i < 4; ++i) {
        int p = dec.add_node();
        dec.link(i < 2 ? l : r, p);
        dec.link(p, dec.add_node(pairs[i][0]));
        dec.link(p, dec.add_node(pairs[i][1]));
    }
    // l and r are degree 3, their link is the middle cut
    EXPECT_EQ(pmd_width(fx::cycle(4), dec), 2);
}

TEST(Decomp, ExactWidth) {
    EXPECT_EQ(pmw_exact_small(fx::cycle(2)).width, 2);
    EXPECT_EQ(pmw_exact_small(fx::k2()).width, 1);
    EXPECT_EQ(pmw_exact_small(fx::cycle(3)).width, 2);
    auto r = pmw_exact_small(fx::k33());
    EXPECT_EQ(pmd_width(fx::k33(), r.dec), r.width);
    EXPECT_THROW(pmw_exact_small(fx::cycle(6)), Error);
}

TEST(Decomp, CycleWidth) {
    EXPECT_EQ(cycd_width(fx::dicycle(2), pair_tree(0, 1)), 1);
    EXPECT_EQ(cycd_width(fx::transitive_tournament(4), four_leaf_tree(0, 1, 2, 3)), 0);
    std::vector<int> order{0, 1, 2, 3};
    // the 4-cycle crosses a cut twice or, for {0,2} | {1,3}, four times
    do {
        int w = cycd_width(fx::dicycle(4), caterpillar(order));
        EXPECT_GE(w, 1);
        EXPECT_LE(w, 2);
    } while (std::next_permutation(order.begin(), order.end()));
    EXPECT_EQ(cycw_exact_small(fx::dicycle(4)).width, 1);
}

TEST(Decomp, DirectedTreeDecompositionValidation) {
    DirectedTreeDecomposition one;
    one.add_node(-1, {0}, {});
    auto c1 = validate_dtd(Digraph(1, {}), one);
    EXPECT_TRUE(c1.valid);
    EXPECT_EQ(c1.width, 0);

    DirectedTreeDecomposition two;
    two.add_node(-1, {0}, {});
    two.add_node(0, {1}, {0});
    auto c2 = validate_dtd(fx::dicycle(2), two);
    EXPECT_TRUE(c2.valid) << c2.reason;
    EXPECT_EQ(c2.width, 1);

    two.guard[1].clear();
    EXPECT_FALSE(validate_dtd(fx::dicycle(2), two).valid);
}

TEST(Decomp, ExactDirectedTreewidth) {
    auto dag = dtw_exact_small(fx::transitive_tournament(4));
    EXPECT_EQ(dag.cop_number, 1);
    EXPECT_EQ(dag.width, 0);
    auto c2 = dtw_exact_small(fx::dicycle(2));
    EXPECT_LE(c2.cop_number, 2);
    EXPECT_LE(c2.width, 1);
    EXPECT_TRUE(validate_dtd(fx::dicycle(2), c2.dec).valid);
    EXPECT_EQ(cop_number(fx::bidirected_complete(4)), 4);
}

TEST(Decomp, CopsCatchTheRobber) {
    auto dag = fx::transitive_tournament(4);
    auto t0 = cops_play(dag, cycw_exact_small(dag).dec);
    EXPECT_TRUE(t0.captured);
    EXPECT_LE(t0.rounds.size(), 4u);
    EXPECT_LE(t0.max_cops, 1);
    for (auto d : {fx::dicycle(4), fx::dicycle(2)}) {
        auto w = cycw_exact_small(d);
        EXPECT_EQ(w.width, 1);
        auto t = cops_play(d, w.dec);
        EXPECT_TRUE(t.captured);
        EXPECT_LE(t.max_cops, 18);
    }
}

TEST(Decomp, PreparationBinarizes) {
    auto d = bidirected_star(4);
    DirectedTreeDecomposition star;
    star.add_node(-1, {0}, {});
    for (int i = 1; i <= 4; ++i) star.add_node(0, {i}, {0});
    auto before = validate_dtd(d, star);
    ASSERT_TRUE(before.valid) << before.reason;
    auto p = prepare_dtd(d, star);
    for (const auto& ch : p.children()) EXPECT_LE(ch.size(), 2u);
    auto after = validate_dtd(d, p, true);
    EXPECT_TRUE(after.valid) << after.reason;
    EXPECT_EQ(after.width, before.width);
    EXPECT_EQ(prepared_problem(d, p), "");

    DirectedTreeDecomposition single;
    single.add_node(-1, {0, 1}, {});
    auto q = prepare_dtd(fx::dicycle(2), single);
    EXPECT_EQ(q.size(), 1);
}

TEST(Decomp, PipelineOnSmallGraphs) {
    auto c4 = compute_pmd(fx::cycle(2));
    EXPECT_EQ(c4.width, 2);
    EXPECT_EQ(nice_pmd_problem(fx::cycle(2), c4.dec, c4.nice_w), "");
    for (int n = 3; n <= 4; ++n) {
        auto r = compute_pmd(fx::cycle(n));
        EXPECT_EQ(leaf_tree_problem(r.dec, 2 * n), "");
        EXPECT_EQ(nice_pmd_problem(fx::cycle(n), r.dec, r.nice_w), "");
        EXPECT_LE(r.width, 2 * pmw_exact_small(fx::cycle(n)).width);
    }
    auto cg = cylindrical_grid(2);
    auto r = compute_pmd(cg.graph);
    EXPECT_EQ(nice_pmd_problem(cg.graph, r.dec, r.nice_w), "");
    EXPECT_NO_THROW(compute_pmd(fx::path(2)));
    EXPECT_THROW(compute_pmd(fx::complete(1, 2)), Error);
}
